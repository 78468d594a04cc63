#ifndef COXROOTS_LINALG_HPP
#define COXROOTS_LINALG_HPP

#include <vector>

#include "coxroots/field.hpp"

namespace coxroots {

// Coordinate vector in the simple-root basis.
using Coords = std::vector<AlgebraicReal>;

// Flattened rational key used for exact dedup and canonical ordering.
// Ordering is lexicographic over the coefficient tuples, coordinate by
// coordinate (coefficient-of-theta order first, then coordinate index).
using RatKey = std::vector<Rat>;

RatKey key_of(const Coords& v);

// Dense square matrix over the field, row major.
struct Mat {
    int n = 0;
    std::vector<AlgebraicReal> a;

    static Mat identity(const FieldContextPtr& ctx, int n);
    static Mat zero(const FieldContextPtr& ctx, int n);

    AlgebraicReal& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const AlgebraicReal& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool operator==(const Mat& o) const;
    RatKey key() const;
};

Mat mat_mul(const Mat& x, const Mat& y);
Coords mat_apply(const Mat& m, const Coords& v);
Coords mat_column(const Mat& m, int j);

AlgebraicReal det(Mat m);
// det of the top-left k x k blocks, k = 1..n.
std::vector<AlgebraicReal> leading_principal_minors(const Mat& m);
int rank(Mat m);

}  // namespace coxroots

#endif
