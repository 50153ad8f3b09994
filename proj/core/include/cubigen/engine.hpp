#pragma once

#include "cubigen/cocycle.hpp"
#include "cubigen/mordell.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cubigen {

/// Rows of lambda-vectors over a shared support.
struct F3Matrix {
    size_t cols = 0;
    std::vector<LambdaVector> rows;
};

/// Generators of E^{-27D}(Q) as supplied by the caller; the dual-kernel point
/// (0, 9n) is prepended whenever -27D is a square. claimed_rank is trusted
/// provenance, never recomputed.
struct GeneratorSet {
    BigInt D;
    std::vector<MordellPoint> points;
    std::optional<int> claimed_rank;
    bool includes_dual_kernel = false;
};

struct BoundsRecord {
    BigInt group_size;       // N = 3^(rank + delta)
    BigInt algebra_count;    // (cN - 1)/2
    BigInt field_bound_rho;  // 2^(rho-1) for type I, 2^(rho-2) for type II, floored at 0
    BigInt field_bound_rank; // 2^rank for type I, 2^(rank-1) for type II, floored at 0
};

/// N = 3^(rank+delta), algebra count (cN-1)/2 and the per-type field bounds;
/// c must be 1 or 3.
BoundsRecord bounds(int rank, int delta, int c, int rho, DedekindType type);

struct QuasiMonogenicReport {
    int rho = 0;
    int rank = 0;
    int delta = 0;
    std::vector<FieldDescriptor> fields;  // ascending by m
    BoundsRecord bounds_c1;
    BoundsRecord bounds_c3;
};

/// One canonical lambda row per generator, dual-kernel row first when present.
F3Matrix build_matrix(const GeneratorSet& gens, const AnalysisContext& ctx);

/// Reduced row echelon form over F3 and the row-space dimension rho.
std::pair<F3Matrix, int> rref3(const F3Matrix& M);

/// Enumerates the 3^rho row-space vectors, deduplicates by sign, applies the
/// type filter (type II: 3-column zero, all other entries nonzero, value
/// congruent to +-1 mod 9; type I: all entries nonzero, value not +-1 mod 9)
/// and keeps the fields whose discriminant is exactly ctx.D.
/// rank defaults to rows-1 (the dual-kernel row carries no rank), delta to
/// the torsion class of E^D.
QuasiMonogenicReport enumerate_quasimonogenic(const F3Matrix& M, const AnalysisContext& ctx,
                                              std::optional<int> rank = std::nullopt,
                                              std::optional<int> delta = std::nullopt);

/// Independent route: forms all sums sum(a_i P_i) with a_i in {0,1,2}, drops
/// the ones with a phi-preimage, maps the rest through field_of_point and
/// keeps descriptors with disc = ctx.D. Must agree with the matrix route.
std::vector<FieldDescriptor> enumerate_by_points(const GeneratorSet& gens,
                                                 const AnalysisContext& ctx);

}  // namespace cubigen
