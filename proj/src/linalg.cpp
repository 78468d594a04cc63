#include "coxroots/linalg.hpp"

#include "coxroots/errors.hpp"

namespace coxroots {

RatKey key_of(const Coords& v) {
    RatKey k;
    size_t d = 0;
    for (const auto& x : v) d += x.coeffs().size();
    k.reserve(d);
    for (const auto& x : v)
        for (const auto& c : x.coeffs()) k.push_back(c);
    return k;
}

Mat Mat::identity(const FieldContextPtr& ctx, int n) {
    Mat m = zero(ctx, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = AlgebraicReal::one(ctx);
    return m;
}

Mat Mat::zero(const FieldContextPtr& ctx, int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, AlgebraicReal::zero(ctx));
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != o.a[i]) return false;
    return true;
}

RatKey Mat::key() const { return key_of(a); }

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw InvariantError("matrix size mismatch");
    Mat r = Mat::zero(x.a.empty() ? FieldContextPtr{} : x.a[0].context(), x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < x.n; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    return r;
}

Coords mat_apply(const Mat& m, const Coords& v) {
    if (static_cast<int>(v.size()) != m.n) throw InvariantError("matrix/vector size mismatch");
    Coords r(v.size(), AlgebraicReal::zero(v.empty() ? FieldContextPtr{} : v[0].context()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += m.at(i, j) * v[j];
        }
    return r;
}

Coords mat_column(const Mat& m, int j) {
    Coords c;
    c.reserve(m.n);
    for (int i = 0; i < m.n; ++i) c.push_back(m.at(i, j));
    return c;
}

namespace {

// Gaussian elimination over the field; returns the number of pivots and
// accumulates the determinant of the leading square part when square.
int eliminate(Mat& m, AlgebraicReal* det_out) {
    const FieldContextPtr ctx = m.a.empty() ? FieldContextPtr{} : m.a[0].context();
    AlgebraicReal d = AlgebraicReal::one(ctx);
    int pivots = 0;
    int row = 0;
    for (int col = 0; col < m.n && row < m.n; ++col) {
        int p = -1;
        for (int i = row; i < m.n; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(p, j), m.at(row, j));
            d = -d;
        }
        const AlgebraicReal pivot = m.at(row, col);
        d *= pivot;
        for (int i = row + 1; i < m.n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            AlgebraicReal f = m.at(i, col) / pivot;
            for (int j = col; j < m.n; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        ++pivots;
        ++row;
    }
    if (det_out) *det_out = pivots == m.n ? d : AlgebraicReal::zero(ctx);
    return pivots;
}

}  // namespace

AlgebraicReal det(Mat m) {
    AlgebraicReal d;
    eliminate(m, &d);
    return d;
}

std::vector<AlgebraicReal> leading_principal_minors(const Mat& m) {
    std::vector<AlgebraicReal> minors;
    minors.reserve(m.n);
    const FieldContextPtr ctx = m.a.empty() ? FieldContextPtr{} : m.a[0].context();
    for (int k = 1; k <= m.n; ++k) {
        Mat sub = Mat::zero(ctx, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
        minors.push_back(det(std::move(sub)));
    }
    return minors;
}

int rank(Mat m) { return eliminate(m, nullptr); }

}  // namespace coxroots
