#pragma once

#include <map>

#include "reebhom/matrix.hpp"

namespace reebhom {

// Chain complex of Q-vector spaces indexed by integer degree, with boundary
// maps lowering degree by one. Degrees without an entry have rank zero, and
// absent boundary maps are zero maps of the implied shape.
class GradedComplex {
public:
    void set_chain_rank(Degree d, size_t rank) {
        if (rank == 0)
            chain_ranks_.erase(d);
        else
            chain_ranks_[d] = rank;
    }

    size_t chain_rank(Degree d) const {
        auto it = chain_ranks_.find(d);
        return it == chain_ranks_.end() ? 0 : it->second;
    }

    const std::map<Degree, size_t>& chain_ranks() const { return chain_ranks_; }

    // Boundary from degree d to degree d-1; shape chain_rank(d-1) x chain_rank(d).
    void set_boundary(Degree d, RationalMatrix m) {
        if (m.rows() != chain_rank(d - 1) || m.cols() != chain_rank(d))
            fail(errc::complex_invalid,
                 "boundary at degree " + std::to_string(d) + " has shape " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(chain_rank(d - 1)) + "x" +
                     std::to_string(chain_rank(d)));
        if (m.is_zero())
            boundaries_.erase(d);
        else
            boundaries_[d] = std::move(m);
    }

    RationalMatrix boundary(Degree d) const {
        auto it = boundaries_.find(d);
        if (it != boundaries_.end()) return it->second;
        return RationalMatrix(chain_rank(d - 1), chain_rank(d));
    }

    bool has_nonzero_boundary(Degree d) const { return boundaries_.count(d) != 0; }

    bool empty() const { return chain_ranks_.empty(); }
    Degree min_degree() const { return chain_ranks_.begin()->first; }
    Degree max_degree() const { return chain_ranks_.rbegin()->first; }

private:
    std::map<Degree, size_t> chain_ranks_;
    std::map<Degree, RationalMatrix> boundaries_;
};

// True iff every composite boundary(d) . boundary(d+1) is the zero matrix.
inline bool verify_complex(const GradedComplex& c) {
    if (c.empty()) return true;
    for (Degree d = c.min_degree(); d <= c.max_degree(); ++d) {
        if (!c.has_nonzero_boundary(d) || !c.has_nonzero_boundary(d + 1)) continue;
        if (!(c.boundary(d) * c.boundary(d + 1)).is_zero()) return false;
    }
    return true;
}

// Homology ranks over Q: dim ker boundary(d) - rank boundary(d+1), per degree.
// Degrees with rank zero are omitted from the result.
inline std::map<Degree, size_t> homology_ranks(const GradedComplex& c) {
    if (!verify_complex(c))
        fail(errc::complex_invalid, "boundary composite is nonzero");
    std::map<Degree, size_t> out;
    for (const auto& [d, rank] : c.chain_ranks()) {
        size_t cycles = rank - matrix_rank(c.boundary(d));
        size_t image = matrix_rank(c.boundary(d + 1));
        if (cycles > image) out[d] = cycles - image;
    }
    return out;
}

// Degree-preserving direct sum; the summands do not interact.
inline GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b) {
    GradedComplex out;
    auto degrees = a.chain_ranks();
    for (const auto& [d, r] : b.chain_ranks()) degrees[d] += r;
    for (const auto& [d, r] : degrees) out.set_chain_rank(d, r);
    for (const auto& [d, r] : degrees) {
        (void)r;
        for (Degree src : {d, d + 1}) {
            if (out.chain_rank(src) == 0 || out.chain_rank(src - 1) == 0) continue;
            RationalMatrix block(out.chain_rank(src - 1), out.chain_rank(src));
            RationalMatrix ba = a.boundary(src);
            RationalMatrix bb = b.boundary(src);
            for (size_t i = 0; i < ba.rows(); ++i)
                for (size_t j = 0; j < ba.cols(); ++j) block.at(i, j) = ba.at(i, j);
            for (size_t i = 0; i < bb.rows(); ++i)
                for (size_t j = 0; j < bb.cols(); ++j)
                    block.at(ba.rows() + i, ba.cols() + j) = bb.at(i, j);
            out.set_boundary(src, std::move(block));
        }
    }
    return out;
}

} // namespace reebhom
