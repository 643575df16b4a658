#include "f2add/gf2.hpp"

#include "f2add/errors.hpp"

#include <algorithm>
#include <bit>

namespace f2add {

namespace {

// Positions whose k-th index bit is zero, for the in-word XOR permutation.
constexpr std::uint64_t kSwapMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

// Permutes the 64 in-word positions by i -> i ^ t, t < 64.
inline std::uint64_t xor_permute_word(std::uint64_t w, std::uint32_t t) {
    for (int k = 0; k < 6; ++k) {
        if ((t >> k) & 1u) {
            const int s = 1 << k;
            w = ((w & kSwapMask[k]) << s) | ((w >> s) & kSwapMask[k]);
        }
    }
    return w;
}

}  // namespace

void check_dim(int dim) {
    if (dim < 1) throw DomainError("dimension must be positive");
    if (dim > kMaxDim) throw DimensionTooLarge("dimension exceeds cap of 24");
}

int dot(GF2Vector u, GF2Vector v) {
    if (u.dim != v.dim) throw DimensionMismatch("dot: dimensions differ");
    return std::popcount(u.bits & v.bits) & 1;
}

DenseSet::DenseSet(int dim) : dim_(dim) {
    check_dim(dim);
    words_.assign(std::size_t(1) << (dim <= 6 ? 0 : dim - 6), 0);
}

DenseSet DenseSet::full(int dim) {
    DenseSet s(dim);
    const std::uint64_t n = std::uint64_t(1) << dim;
    for (auto& w : s.words_) w = ~0ull;
    if (dim < 6) s.words_[0] = (std::uint64_t(1) << n) - 1;
    s.card_ = n;
    return s;
}

DenseSet DenseSet::of(int dim, const std::vector<std::uint32_t>& elems) {
    DenseSet s(dim);
    for (auto x : elems) s.insert(x);
    return s;
}

DenseSet DenseSet::from_words(int dim, std::vector<std::uint64_t> words) {
    DenseSet s(dim);
    if (words.size() != s.words_.size()) throw DomainError("from_words: wrong word count");
    if (dim < 6) words[0] &= (std::uint64_t(1) << (1u << dim)) - 1;
    s.words_ = std::move(words);
    s.card_ = 0;
    for (auto w : s.words_) s.card_ += std::popcount(w);
    return s;
}

void DenseSet::insert(std::uint32_t x) {
    if (x >= domain_size()) throw DomainError("element out of range for dimension");
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t(1) << (x & 63);
    if (!(w & bit)) {
        w |= bit;
        ++card_;
    }
}

void DenseSet::erase(std::uint32_t x) {
    if (x >= domain_size()) return;
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t(1) << (x & 63);
    if (w & bit) {
        w &= ~bit;
        --card_;
    }
}

std::vector<std::uint32_t> DenseSet::elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(card_);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            const int b = std::countr_zero(w);
            out.push_back(static_cast<std::uint32_t>((wi << 6) | b));
            w &= w - 1;
        }
    }
    return out;
}

DenseSet DenseSet::translated(std::uint32_t t) const {
    if (t >= domain_size()) throw DomainError("translate out of range");
    DenseSet out(dim_);
    const std::uint32_t th = t >> 6;
    const std::uint32_t tl = t & 63;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        out.words_[wi ^ th] = xor_permute_word(words_[wi], tl);
    }
    out.card_ = card_;
    return out;
}

std::uint64_t DenseSet::intersection_size(const DenseSet& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("intersection_size: dims differ");
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        n += std::popcount(words_[i] & other.words_[i]);
    }
    return n;
}

Subspace::Subspace(int dim) : dim_(dim) { check_dim(dim); }

Subspace Subspace::full(int dim) {
    Subspace s(dim);
    for (int i = dim - 1; i >= 0; --i) s.basis_.push_back(1u << i);
    s.pivot_mask_ = (dim == 32) ? ~0u : ((1u << dim) - 1);
    return s;
}

void Subspace::insert_row(std::uint32_t v) {
    std::uint32_t x = v;
    for (auto r : basis_) {
        const std::uint32_t pivot = 1u << (31 - std::countl_zero(r));
        if (x & pivot) x ^= r;
    }
    if (!x) return;
    const std::uint32_t pivot = 1u << (31 - std::countl_zero(x));
    for (auto& r : basis_) {
        if (r & pivot) r ^= x;
    }
    basis_.push_back(x);
    pivot_mask_ |= pivot;
    std::sort(basis_.begin(), basis_.end(), std::greater<std::uint32_t>());
}

Subspace Subspace::span_of(int dim, const std::vector<std::uint32_t>& vecs) {
    Subspace s(dim);
    for (auto v : vecs) {
        if (v >= (std::uint64_t(1) << dim)) throw DomainError("vector out of range for dimension");
        s.insert_row(v);
    }
    return s;
}

std::uint32_t Subspace::reduce(std::uint32_t x) const {
    // Rows are in decreasing pivot order, so one pass clears every pivot bit;
    // what remains is the unique coset element supported on free positions.
    for (auto r : basis_) {
        const std::uint32_t pivot = 1u << (31 - std::countl_zero(r));
        if (x & pivot) x ^= r;
    }
    return x;
}

std::vector<std::uint32_t> Subspace::elements() const {
    const std::size_t n = std::size_t(1) << rank();
    std::vector<std::uint32_t> out;
    out.reserve(n);
    out.push_back(0);
    for (auto r : basis_) {
        const std::size_t m = out.size();
        for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] ^ r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DenseSet Subspace::to_dense() const {
    DenseSet s(dim_);
    for (auto x : elements()) s.insert(x);
    return s;
}

Subspace span_closure(const std::vector<GF2Vector>& vectors, int dim) {
    int d = dim;
    for (auto v : vectors) {
        if (d == 0) d = v.dim;
        if (v.dim != d) throw DimensionMismatch("span_closure: mixed dimensions");
    }
    std::vector<std::uint32_t> raw;
    raw.reserve(vectors.size());
    for (auto v : vectors) raw.push_back(v.bits);
    return Subspace::span_of(d, raw);
}

Subspace orthogonal_complement(const Subspace& s) {
    // For each free position f, the vector e_f plus the pivot-bit corrections
    // read off the RREF rows is orthogonal to every row; these span the
    // complement.
    const int n = s.dim();
    std::vector<std::uint32_t> gens;
    const std::uint32_t pm = s.pivot_mask();
    for (int f = 0; f < n; ++f) {
        if ((pm >> f) & 1u) continue;
        std::uint32_t v = 1u << f;
        for (auto r : s.basis()) {
            if ((r >> f) & 1u) {
                const std::uint32_t pivot = 1u << (31 - std::countl_zero(r));
                v |= pivot;
            }
        }
        gens.push_back(v);
    }
    return Subspace::span_of(n, gens);
}

bool is_closed_under_addition(const std::vector<GF2Vector>& s) {
    if (s.empty()) throw EmptySet("is_closed_under_addition: empty set");
    const int d = s.front().dim;
    DenseSet member(d);
    for (auto v : s) {
        if (v.dim != d) throw DimensionMismatch("is_closed_under_addition: mixed dimensions");
        member.insert(v.bits);
    }
    for (auto u : s) {
        for (auto v : s) {
            if (!member.contains(u.bits ^ v.bits)) return false;
        }
    }
    return true;
}

std::vector<GF2Vector> coset_representatives(const Subspace& h) {
    const int n = h.dim();
    std::vector<int> free_pos;
    for (int i = 0; i < n; ++i) {
        if (!((h.pivot_mask() >> i) & 1u)) free_pos.push_back(i);
    }
    const std::size_t count = std::size_t(1) << free_pos.size();
    std::vector<GF2Vector> reps;
    reps.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t x = 0;
        for (std::size_t b = 0; b < free_pos.size(); ++b) {
            if ((i >> b) & 1u) x |= 1u << free_pos[b];
        }
        reps.push_back(GF2Vector{x, n});
    }
    return reps;  // spreading ascending i over ascending positions keeps order
}

DenseSet slice(const DenseSet& a, GF2Vector xi, int j) {
    if (xi.dim != a.dim()) throw DimensionMismatch("slice: dims differ");
    if (xi.bits == 0) throw ZeroFrequency("slice: zero frequency");
    // parity(x & xi) splits per 64-word into a fixed in-word pattern plus a
    // per-word constant from the high bits of x.
    std::uint64_t odd_low = 0;
    for (int k = 0; k < 6; ++k) {
        if ((xi.bits >> k) & 1u) odd_low ^= ~kSwapMask[k];
    }
    const std::uint32_t xi_high = xi.bits >> 6;
    const auto& words = a.words();
    std::vector<std::uint64_t> out(words.size());
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const int high_par = std::popcount(static_cast<std::uint32_t>(wi) & xi_high) & 1;
        // keep positions with parity == j
        const std::uint64_t keep = ((j ^ high_par) == 1) ? odd_low : ~odd_low;
        out[wi] = words[wi] & keep;
    }
    return DenseSet::from_words(a.dim(), std::move(out));
}

}  // namespace f2add
