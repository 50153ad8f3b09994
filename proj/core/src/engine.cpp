#include "cubigen/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cubigen {

namespace {

BigInt pow2_floor0(int e) { return e < 0 ? BigInt(0) : pow_bigint(2, static_cast<unsigned>(e)); }

BigInt pow3(int e) { return pow_bigint(3, static_cast<unsigned>(e)); }

}  // namespace

BoundsRecord bounds(int rank, int delta, int c, int rho, DedekindType type) {
    if (rank < 0 || rho < 0) throw std::domain_error("bounds: rank and rho must be nonnegative");
    if (delta != 0 && delta != 1) throw std::domain_error("bounds: delta must be 0 or 1");
    if (c != 1 && c != 3) throw std::domain_error("bounds: c must be 1 or 3");
    BoundsRecord rec;
    rec.group_size = pow3(rank + delta);
    rec.algebra_count = (c * rec.group_size - 1) / 2;
    rec.field_bound_rho = type == DedekindType::I ? pow2_floor0(rho - 1) : pow2_floor0(rho - 2);
    rec.field_bound_rank = type == DedekindType::I ? pow2_floor0(rank) : pow2_floor0(rank - 1);
    return rec;
}

F3Matrix build_matrix(const GeneratorSet& gens, const AnalysisContext& ctx) {
    F3Matrix M;
    M.cols = ctx.prime_support.size();
    MordellCurve curve{Rational(-27) * ctx.D, CurveModel::four_x3};
    for (const MordellPoint& P : gens.points) {
        if (!on_curve(curve, P)) throw std::domain_error("build_matrix: generator not on E^{-27D}");
        M.rows.push_back(lambda_vector(P, ctx));
    }
    return M;
}

std::pair<F3Matrix, int> rref3(const F3Matrix& M) {
    F3Matrix R = M;
    size_t pivot_row = 0;
    for (size_t col = 0; col < R.cols && pivot_row < R.rows.size(); ++col) {
        size_t found = pivot_row;
        while (found < R.rows.size() && R.rows[found].entries[col] == 0) ++found;
        if (found == R.rows.size()) continue;
        std::swap(R.rows[pivot_row], R.rows[found]);
        // normalize pivot to 1 (2 is its own inverse mod 3)
        if (R.rows[pivot_row].entries[col] == 2)
            R.rows[pivot_row] = R.rows[pivot_row].negated();
        for (size_t r = 0; r < R.rows.size(); ++r) {
            if (r == pivot_row) continue;
            uint8_t factor = R.rows[r].entries[col];
            if (factor == 0) continue;
            R.rows[r] = lambda_add(R.rows[r],
                                   lambda_scale(static_cast<uint8_t>(3 - factor), R.rows[pivot_row]));
        }
        ++pivot_row;
    }
    return {R, static_cast<int>(pivot_row)};
}

namespace {

// all sign-deduplicated nonzero vectors of the row space
std::vector<LambdaVector> row_space_orbits(const F3Matrix& M) {
    auto [R, rho] = rref3(M);
    std::vector<LambdaVector> basis(R.rows.begin(), R.rows.begin() + rho);
    std::set<std::vector<uint8_t>> seen;
    std::vector<LambdaVector> orbits;
    size_t total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= 3;
    for (size_t idx = 1; idx < total; ++idx) {
        size_t rem = idx;
        LambdaVector v;
        v.entries.assign(M.cols, 0);
        for (size_t i = 0; i < basis.size(); ++i) {
            uint8_t a = static_cast<uint8_t>(rem % 3);
            rem /= 3;
            if (a != 0) v = lambda_add(v, lambda_scale(a, basis[i]));
        }
        LambdaVector canon = v.canonical();
        if (canon.is_zero()) continue;
        if (seen.insert(canon.entries).second) orbits.push_back(canon);
    }
    return orbits;
}

BigInt vector_value(const LambdaVector& v, const AnalysisContext& ctx, size_t first) {
    BigInt value = 1;
    for (size_t i = first; i < v.entries.size(); ++i)
        value *= pow_bigint(ctx.prime_support[i], v.entries[i]);
    return value;
}

}  // namespace

QuasiMonogenicReport enumerate_quasimonogenic(const F3Matrix& M, const AnalysisContext& ctx,
                                              std::optional<int> rank, std::optional<int> delta) {
    QuasiMonogenicReport report;
    report.rho = rref3(M).second;
    report.rank = rank.value_or(std::max<int>(0, static_cast<int>(M.rows.size()) - 1));
    report.delta = delta.value_or(torsion_class(Rational(ctx.D)).delta);

    std::set<FieldDescriptor> fields;
    for (const LambdaVector& v : row_space_orbits(M)) {
        if (ctx.branch == DedekindType::II) {
            if (v.entries[0] != 0) continue;  // no 3-component for type II fields
            bool all_nonzero = true;
            for (size_t i = 1; i < v.entries.size(); ++i) all_nonzero &= v.entries[i] != 0;
            if (!all_nonzero || v.entries.size() < 2) continue;
            BigInt m = vector_value(v, ctx, 1);
            if (residue_mod9(m) == ResidueMod9::other) continue;
            FieldDescriptor desc = classify_field(m);
            if (desc.disc == ctx.D) fields.insert(desc);
        } else {
            bool all_nonzero = !v.entries.empty();
            for (uint8_t e : v.entries) all_nonzero &= e != 0;
            if (!all_nonzero) continue;
            BigInt m = vector_value(v, ctx, 0);
            if (m % 3 != 0 && residue_mod9(m) != ResidueMod9::other) continue;
            FieldDescriptor desc = classify_field(m);
            if (desc.disc == ctx.D) fields.insert(desc);
        }
    }
    report.fields.assign(fields.begin(), fields.end());
    report.bounds_c1 = bounds(report.rank, report.delta, 1, report.rho, ctx.branch);
    report.bounds_c3 = bounds(report.rank, report.delta, 3, report.rho, ctx.branch);
    return report;
}

std::vector<FieldDescriptor> enumerate_by_points(const GeneratorSet& gens,
                                                 const AnalysisContext& ctx) {
    MordellCurve curve{Rational(-27) * ctx.D, CurveModel::four_x3};
    for (const MordellPoint& P : gens.points)
        if (!on_curve(curve, P))
            throw std::domain_error("enumerate_by_points: generator not on E^{-27D}");

    std::set<FieldDescriptor> fields;
    size_t total = 1;
    for (size_t i = 0; i < gens.points.size(); ++i) total *= 3;
    for (size_t idx = 1; idx < total; ++idx) {
        size_t rem = idx;
        MordellPoint sum = MordellPoint::at_infinity(CurveModel::four_x3);
        for (const MordellPoint& P : gens.points) {
            int a = static_cast<int>(rem % 3);
            rem /= 3;
            if (a != 0) sum = add(curve, sum, scalar_mul(curve, a, P));
        }
        if (sum.infinity) continue;
        if (preimage_by_phi(Rational(ctx.D), sum).has_value()) continue;
        auto desc = field_of_point(sum, ctx);
        if (desc && desc->disc == ctx.D) fields.insert(*desc);
    }
    return {fields.begin(), fields.end()};
}

}  // namespace cubigen
