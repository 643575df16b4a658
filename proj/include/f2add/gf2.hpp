#pragma once

#include <cstdint>
#include <vector>

namespace f2add {

// Dense tables of size 2^n cap the ambient dimension; 24 keeps a full
// 64-bit Walsh table at 128 MiB.
inline constexpr int kMaxDim = 24;

/// An element of F_2^n (point or frequency), stored as an n-bit pattern.
/// Addition is XOR; "lexicographically smallest" always means smallest as
/// an unsigned integer.
struct GF2Vector {
    std::uint32_t bits = 0;
    int dim = 0;

    friend bool operator==(GF2Vector a, GF2Vector b) = default;
};

/// Standard inner product x1*y1 + ... + xn*yn over F_2: the parity of
/// popcount(u & v). Throws DimensionMismatch when dims differ.
int dot(GF2Vector u, GF2Vector v);

void check_dim(int dim);

/// A subset of F_2^n as a 2^n-bit occupancy vector with cached cardinality.
/// Values are immutable in spirit: operations return new sets; insert() is
/// for construction only.
class DenseSet {
public:
    DenseSet() = default;
    explicit DenseSet(int dim);
    static DenseSet full(int dim);
    static DenseSet of(int dim, const std::vector<std::uint32_t>& elems);
    static DenseSet from_words(int dim, std::vector<std::uint64_t> words);

    int dim() const { return dim_; }
    std::uint32_t domain_size() const { return 1u << dim_; }
    std::uint64_t size() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool contains(std::uint32_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1u;
    }
    void insert(std::uint32_t x);
    void erase(std::uint32_t x);

    std::vector<std::uint32_t> elements() const;

    /// {x ^ t : x in this} via word permutation + in-word delta swaps.
    DenseSet translated(std::uint32_t t) const;

    std::uint64_t intersection_size(const DenseSet& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const DenseSet& a, const DenseSet& b) {
        return a.dim_ == b.dim_ && a.words_ == b.words_;
    }

private:
    int dim_ = 0;
    std::uint64_t card_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A linear subspace of F_2^n held as a reduced-row-echelon basis
/// (rows ordered by decreasing pivot; each pivot bit appears in exactly one
/// row). The RREF form makes equality canonical and coset reduction greedy.
class Subspace {
public:
    explicit Subspace(int dim);  // zero subspace {0}
    static Subspace zero(int dim) { return Subspace(dim); }
    static Subspace full(int dim);
    static Subspace span_of(int dim, const std::vector<std::uint32_t>& vecs);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    int codim() const { return dim_ - rank(); }
    std::uint64_t size() const { return std::uint64_t(1) << rank(); }
    const std::vector<std::uint32_t>& basis() const { return basis_; }
    std::uint32_t pivot_mask() const { return pivot_mask_; }

    /// Lexicographically smallest element of the coset x + S.
    std::uint32_t reduce(std::uint32_t x) const;
    bool contains(std::uint32_t x) const { return reduce(x) == 0; }

    std::vector<std::uint32_t> elements() const;  // ascending
    DenseSet to_dense() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.dim_ == b.dim_ && a.basis_ == b.basis_;
    }

private:
    int dim_;
    std::vector<std::uint32_t> basis_;  // RREF, decreasing pivot
    std::uint32_t pivot_mask_ = 0;

    void insert_row(std::uint32_t v);
};

/// Smallest subspace containing all inputs (empty list gives {0}).
Subspace span_closure(const std::vector<GF2Vector>& vectors, int dim);

/// { x : dot(x, s) = 0 for all s in S }; an involution with
/// dim(S) + dim(complement) = n.
Subspace orthogonal_complement(const Subspace& s);

/// Literal pairwise check that x + y stays inside the set.
bool is_closed_under_addition(const std::vector<GF2Vector>& s);

/// One representative per coset of H, each the lexicographically smallest
/// element of its coset (so 0 represents H itself), in ascending order.
std::vector<GF2Vector> coset_representatives(const Subspace& h);

/// { x in A : dot(x, xi) = j }. The two slices partition A.
DenseSet slice(const DenseSet& a, GF2Vector xi, int j);

}  // namespace f2add
