#include "cubigen/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubigen {

AnalysisContext AnalysisContext::for_n(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("AnalysisContext: n must be positive");
    AnalysisContext ctx;
    ctx.n = n;
    ctx.D = -3 * n * n;
    if (n % 3 == 0) {
        ctx.branch = DedekindType::I;
        ctx.n_prime = n / 3;
        for (const auto& [p, e] : factor_positive(ctx.n_prime)) ctx.prime_support.push_back(p);
    } else {
        ctx.branch = DedekindType::II;
        ctx.prime_support.push_back(3);
        for (const auto& [p, e] : factor_positive(n)) ctx.prime_support.push_back(p);
    }
    return ctx;
}

AnalysisContext AnalysisContext::for_discriminant(const BigInt& D) {
    if (D >= 0 || D % 3 != 0)
        throw std::invalid_argument("AnalysisContext: discriminant must be of the form -3n^2");
    BigInt n;
    if (!is_perfect_square(-D / 3, &n))
        throw std::invalid_argument("AnalysisContext: discriminant must be of the form -3n^2");
    return for_n(n);
}

bool LambdaVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](uint8_t e) { return e == 0; });
}

LambdaVector LambdaVector::negated() const {
    LambdaVector out = *this;
    for (auto& e : out.entries) e = static_cast<uint8_t>((3 - e) % 3);
    return out;
}

LambdaVector LambdaVector::canonical() const {
    for (uint8_t e : entries) {
        if (e == 0) continue;
        return e == 1 ? *this : negated();
    }
    return *this;
}

LambdaVector lambda_add(const LambdaVector& a, const LambdaVector& b) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("lambda_add: support size mismatch");
    LambdaVector out = a;
    for (size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = static_cast<uint8_t>((out.entries[i] + b.entries[i]) % 3);
    return out;
}

LambdaVector lambda_scale(uint8_t s, const LambdaVector& a) {
    LambdaVector out = a;
    for (auto& e : out.entries) e = static_cast<uint8_t>(e * s % 3);
    return out;
}

namespace {

MordellCurve analysis_curve(const AnalysisContext& ctx) {
    return MordellCurve{Rational(-27) * ctx.D, CurveModel::four_x3};
}

// Cube-free class of the point: the class of (y0-9n)/(y0+9n), or of D for the
// dual-kernel points (x0 = 0).
CubeFreeClass point_class(const MordellPoint& P, const AnalysisContext& ctx) {
    if (P.infinity) throw std::domain_error("point_class: point at infinity has no field");
    if (!on_curve(analysis_curve(ctx), P))
        throw std::domain_error("point_class: point not on E^{-27D}");
    if (P.x == 0) return cube_free_class(Rational(ctx.D));
    return cube_free_class((P.y - 9 * ctx.n) / (P.y + 9 * ctx.n));
}

}  // namespace

Rational primitive_ratio(const MordellPoint& P, const AnalysisContext& ctx) {
    if (P.infinity) throw std::domain_error("primitive_ratio: point at infinity");
    if (!on_curve(analysis_curve(ctx), P))
        throw std::domain_error("primitive_ratio: point not on E^{-27D}");
    if (P.y == -9 * ctx.n)
        throw DualKernelPoint("primitive_ratio: (0, -9n) has an undefined ratio");
    return (P.y - 9 * ctx.n) / (P.y + 9 * ctx.n);
}

std::optional<FieldDescriptor> field_of_point(const MordellPoint& P, const AnalysisContext& ctx) {
    CubeFreeClass cls = point_class(P, ctx);
    bool trivial = cls.m == 1;
    bool in_image = preimage_by_phi(Rational(ctx.D), P).has_value();
    if (trivial != in_image)
        throw std::logic_error("field_of_point: class triviality disagrees with phi-membership");
    if (trivial) return std::nullopt;
    return classify_field(cls.m);
}

LambdaVector lambda_from_class(const CubeFreeClass& cls, const AnalysisContext& ctx) {
    LambdaVector v;
    v.entries.assign(ctx.prime_support.size(), 0);
    auto assign = [&](const BigInt& part, uint8_t value) {
        for (const auto& [p, e] : factor_positive(part)) {
            auto it = std::find(ctx.prime_support.begin(), ctx.prime_support.end(), p);
            if (it == ctx.prime_support.end())
                throw SupportViolation("lambda_from_class: prime " + p.str() +
                                       " outside the support");
            v.entries[static_cast<size_t>(it - ctx.prime_support.begin())] = value;
        }
    };
    assign(cls.h, 1);
    assign(cls.k, 2);
    return v.canonical();
}

LambdaVector lambda_vector(const MordellPoint& P, const AnalysisContext& ctx) {
    return lambda_from_class(point_class(P, ctx), ctx);
}

std::optional<FieldDescriptor> trivially_monogenic(const AnalysisContext& ctx) {
    if (ctx.branch != DedekindType::I) return std::nullopt;
    CubeFreeClass cls = cube_free_class(Rational(ctx.n_prime));
    if (cls.m == 1) return std::nullopt;
    FieldDescriptor desc = classify_field(cls.m);
    if (desc.type != DedekindType::I) return std::nullopt;
    desc.trivially_monogenic = true;
    return desc;
}

FieldDescriptor classify_field(const BigInt& m) {
    if (m <= 1) throw std::domain_error("classify_field: m must be > 1");
    BigInt h = 1, k = 1;
    for (const auto& [p, e] : factor_positive(m)) {
        if (e == 1)
            h *= p;
        else if (e == 2)
            k *= p;
        else
            throw std::domain_error("classify_field: m is not cube-free");
    }
    FieldDescriptor desc;
    // Q(cbrt(hk^2)) = Q(cbrt(h^2 k)); the smaller representative is canonical
    if (h * h * k < m) {
        desc.m = h * h * k;
        std::swap(h, k);
    } else {
        desc.m = m;
    }
    desc.h = h;
    desc.k = k;
    BigInt hk = h * k;
    bool type_two = desc.m % 3 != 0 && residue_mod9(desc.m) != ResidueMod9::other;
    desc.type = type_two ? DedekindType::II : DedekindType::I;
    desc.disc = (type_two ? -3 : -27) * hk * hk;
    desc.trivially_monogenic = desc.type == DedekindType::I && desc.k == 1;
    return desc;
}

}  // namespace cubigen
