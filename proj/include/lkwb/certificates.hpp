#ifndef LKWB_CERTIFICATES_HPP
#define LKWB_CERTIFICATES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace lkwb {

template <class F>
struct MinorCertificate {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    F determinant;
};

/// Index sets of an s×s minor of M with nonzero determinant, certifying
/// rank(M) >= s. Pivots come from greedy Gauss-Jordan elimination; the minor
/// is then re-verified by an independent exact determinant. Returns nullopt
/// when rank(M) < s.
template <class F>
std::optional<MinorCertificate<F>> find_invertible_submatrix(const Matrix<F>& m, std::size_t s) {
    if (s > std::min(m.rows(), m.cols()))
        throw Error(ErrorKind::DimensionMismatch, "minor size exceeds matrix dimensions");
    auto ech = row_echelon(m);
    if (ech.rank() < s) return std::nullopt;
    MinorCertificate<F> cert;
    cert.rows.assign(ech.source_rows.begin(), ech.source_rows.begin() + static_cast<long>(s));
    cert.cols.assign(ech.pivot_cols.begin(), ech.pivot_cols.begin() + static_cast<long>(s));
    cert.determinant = det(m.submatrix(cert.rows, cert.cols));
    if (detail::coeff_is_zero(cert.determinant))
        throw Error(ErrorKind::InternalCheckFailed, "certified minor has zero determinant");
    return cert;
}

}  // namespace lkwb

#endif
