#pragma once

#include <optional>
#include <vector>

#include "hk/monodromy.hpp"

namespace hk {

enum class SearchStatus { Found, NotFoundWithinBound, NonexistenceProved };

// NotFoundWithinBound is a soft outcome, never a nonexistence claim.
struct SearchResult {
    SearchStatus status = SearchStatus::NotFoundWithinBound;
    std::optional<IntVec> vector;

    static SearchResult found(IntVec v) {
        return {SearchStatus::Found, std::move(v)};
    }
    static SearchResult not_found() { return {}; }
    static SearchResult nonexistence() {
        return {SearchStatus::NonexistenceProved, std::nullopt};
    }
};

// Enumeration order used by every bounded search in this module: shells of
// increasing max-norm m = 1..height; within a shell, candidates in
// lexicographic order on coordinates (ascending, -m first); vectors are
// identified with their negatives by visiting only representatives whose
// first nonzero coordinate is positive. Witnesses are minimal in this order.

// First primitive delta with pair(delta,delta) = 0, or NonexistenceProved
// for definite forms, or NotFoundWithinBound.
SearchResult find_isotropic(const Lattice& lat, long height);

// First l with pair(l,l) > 0 and pair(l,delta) = 0. Requires delta isotropic.
SearchResult find_polarization(const Lattice& lat, const IntVec& delta, long height);

// First primitive isotropic vector not proportional to delta.
SearchResult find_second_isotropic(const Lattice& lat, const IntVec& delta, long height);

// First v with pair(v,delta) = 0 and pair(v,v) even and nonzero — the
// companion entering eichler_transvection in the certificate pipeline.
SearchResult find_transvection_companion(const Lattice& lat, const IntVec& delta,
                                         long height);

// All primitive isotropic representatives of max-norm exactly m, in
// enumeration order.
std::vector<IntVec> isotropic_shell(const Lattice& lat, const Int& m);

// Partition of projective primitive isotropic vectors (orthogonal to the
// polarization when given) under words of length <= depth in the generators
// and their inverses. A merge is always certified by a connecting word;
// distinct classes only mean "not merged within depth".
struct CuspPartition {
    struct Witness {
        int from = 0;                 // index into points
        int to = 0;                   // index into points
        std::vector<int> word;        // +i = generators[i-1], -i = its inverse
    };

    std::vector<IntVec> points;              // enumeration order, sign-normalized
    std::vector<std::vector<int>> classes;   // sorted point indices
    std::vector<Witness> witnesses;
};

CuspPartition cusp_orbit_partition(const Lattice& lat,
                                   const std::optional<IntVec>& polarization,
                                   const std::vector<Isometry>& generators,
                                   long height, int depth);

}  // namespace hk
