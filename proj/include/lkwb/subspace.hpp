#ifndef LKWB_SUBSPACE_HPP
#define LKWB_SUBSPACE_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace lkwb {

/// Subspace of F^ambient held as a reduced row-echelon basis. Two subspaces
/// are equal iff their bases are identical.
template <class F>
class SubspaceBasis {
   public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static SubspaceBasis span(std::size_t ambient, const std::vector<std::vector<F>>& vecs) {
        Matrix<F> m(vecs.size(), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            if (vecs[i].size() != ambient) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient");
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vecs[i][j];
        }
        return from_rows(std::move(m));
    }

    static SubspaceBasis full(std::size_t ambient) {
        SubspaceBasis s;
        s.ambient_ = ambient;
        s.basis_ = Matrix<F>::identity(ambient);
        s.pivots_.resize(ambient);
        for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
        return s;
    }

    /// Coordinate subspace spanned by the given unit vectors.
    static SubspaceBasis coordinate(std::size_t ambient, const std::vector<std::size_t>& coords) {
        std::vector<std::vector<F>> vs;
        for (auto c : coords) {
            std::vector<F> v(ambient, F(0));
            v.at(c) = F(1);
            vs.push_back(std::move(v));
        }
        return span(ambient, vs);
    }

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const Matrix<F>& basis_matrix() const noexcept { return basis_; }

    std::vector<F> vector(std::size_t i) const {
        auto r = basis_.row(i);
        return {r.begin(), r.end()};
    }
    std::vector<std::vector<F>> vectors() const {
        std::vector<std::vector<F>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
        return out;
    }

    /// v minus its projection along the echelon basis; zero iff v lies in the span.
    std::vector<F> reduce(std::vector<F> v) const {
        if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient");
        for (std::size_t i = 0; i < dim(); ++i) {
            F c = v[pivots_[i]];
            if (detail::coeff_is_zero(c)) continue;
            for (std::size_t j = 0; j < ambient_; ++j) {
                const F& b = basis_(i, j);
                if (!detail::coeff_is_zero(b)) v[j] = v[j] - c * b;
            }
        }
        return v;
    }

    bool contains(std::span<const F> v) const {
        auto red = reduce(std::vector<F>(v.begin(), v.end()));
        return is_zero_vector<F>(red);
    }
    bool contains(const SubspaceBasis& o) const {
        check_ambient(o);
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }

    friend SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
        a.check_ambient(b);
        auto vs = a.vectors();
        auto ws = b.vectors();
        vs.insert(vs.end(), ws.begin(), ws.end());
        return span(a.ambient_, vs);
    }

    /// A ∩ B from the left kernel of the stacked bases: x·A = y·B.
    friend SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
        a.check_ambient(b);
        if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis(a.ambient_);
        const std::size_t da = a.dim(), db = b.dim(), n = a.ambient_;
        Matrix<F> stacked(n, da + db);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < da; ++i) stacked(j, i) = a.basis_(i, j);
            for (std::size_t i = 0; i < db; ++i) stacked(j, da + i) = b.basis_(i, j);
        }
        std::vector<std::vector<F>> out;
        for (auto& coeffs : nullspace_vectors(stacked)) {
            std::vector<F> v(n, F(0));
            for (std::size_t i = 0; i < da; ++i) {
                if (detail::coeff_is_zero(coeffs[i])) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!detail::coeff_is_zero(a.basis_(i, j))) v[j] = v[j] + coeffs[i] * a.basis_(i, j);
            }
            out.push_back(std::move(v));
        }
        return span(n, out);
    }

   private:
    static SubspaceBasis from_rows(Matrix<F> m) {
        SubspaceBasis s;
        s.ambient_ = m.cols();
        auto ech = row_echelon(std::move(m));
        s.pivots_ = ech.pivot_cols;
        s.basis_ = Matrix<F>(s.pivots_.size(), s.ambient_);
        for (std::size_t i = 0; i < s.pivots_.size(); ++i)
            for (std::size_t j = 0; j < s.ambient_; ++j) s.basis_(i, j) = ech.rref(i, j);
        return s;
    }

    void check_ambient(const SubspaceBasis& o) const {
        if (ambient_ != o.ambient_) throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
    }

    std::size_t ambient_ = 0;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

/// Right null space of M as an echelonized subspace; every basis vector is
/// checked to satisfy M·v = 0.
template <class F>
SubspaceBasis<F> kernel(const Matrix<F>& m) {
    auto ker = SubspaceBasis<F>::span(m.cols(), nullspace_vectors(m));
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        auto v = ker.vector(i);
        if (!is_zero_vector<F>(m.apply(v))) throw Error(ErrorKind::InternalCheckFailed, "kernel vector not annihilated");
    }
    return ker;
}

template <class F>
void check_square_ops(std::size_t ambient, const std::vector<Matrix<F>>& ops) {
    for (auto& op : ops)
        if (op.rows() != ambient || op.cols() != ambient)
            throw Error(ErrorKind::DimensionMismatch, "operator size differs from ambient dimension");
}

/// Smallest subspace containing `seed` and stable under every operator.
/// Breadth-first: each generation applies all operators to the vectors added
/// in the previous one and re-echelonizes.
template <class F>
SubspaceBasis<F> operator_closure(std::size_t ambient, const std::vector<std::vector<F>>& seed,
                                  const std::vector<Matrix<F>>& ops) {
    check_square_ops(ambient, ops);
    SubspaceBasis<F> current = SubspaceBasis<F>::span(ambient, seed);
    std::vector<std::vector<F>> frontier = current.vectors();
    while (!frontier.empty()) {
        std::vector<std::vector<F>> images;
        for (auto& v : frontier)
            for (auto& op : ops) {
                auto w = current.reduce(op.apply(v));
                if (!is_zero_vector<F>(w)) images.push_back(std::move(w));
            }
        if (images.empty()) break;
        // reduced images vanish on the current pivot columns, so their span
        // meets the current subspace trivially
        auto fresh = SubspaceBasis<F>::span(ambient, images);
        frontier = fresh.vectors();
        current = sum(current, fresh);
    }
    return current;
}

template <class F>
bool is_invariant(const SubspaceBasis<F>& s, const std::vector<Matrix<F>>& ops) {
    check_square_ops(s.ambient_dim(), ops);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto v = s.vector(i);
        for (auto& op : ops)
            if (!s.contains(op.apply(v))) return false;
    }
    return true;
}

}  // namespace lkwb

#endif
