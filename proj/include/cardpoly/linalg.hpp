/**
 * @file linalg.hpp
 * @brief Exact rank computations over the rationals.
 *
 * Nothing here touches floating point. Rows are scaled to integer rows
 * (rank is invariant under nonzero row scaling) and eliminated without
 * fractions.
 */

#ifndef CARDPOLY_LINALG_HPP
#define CARDPOLY_LINALG_HPP

#include "cardpoly/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cardpoly {

/// Dense rows x cols matrix of rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix from_rows(const std::vector<RationalVector> &rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational &operator()(int r, int c) { return data_[idx(r, c)]; }
    const Rational &operator()(int r, int c) const { return data_[idx(r, c)]; }

    std::span<const Rational> row(int r) const
    {
        return {data_.data() + idx(r, 0), static_cast<std::size_t>(cols_)};
    }

    RationalMatrix transposed() const;

private:
    std::size_t idx(int r, int c) const
    {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact rank by Bareiss fraction-free elimination.
int rank(const RationalMatrix &m);

/// Dimension of the affine hull: rank of {p_i - p_0}. Throws
/// InvalidParameter on an empty list or mismatched dimensions.
int affine_rank(const std::vector<RationalVector> &points);

/// True iff y is an affine combination of points.
bool in_affine_hull(const RationalVector &y,
                    const std::vector<RationalVector> &points);

/**
 * Row space built one vector at a time.
 *
 * Basis rows are kept as primitive integer vectors in echelon order; a
 * candidate is reduced against each basis row by integer cross
 * multiplication and divided by its content afterwards. Elimination runs
 * in 64-bit arithmetic with overflow checks and transparently restarts in
 * arbitrary precision if an intermediate value would overflow.
 */
class RowSpace {
public:
    explicit RowSpace(int dimension);

    /// Adds v; returns true iff it was independent of the current span.
    bool add(std::span<const Rational> v);
    bool add(std::span<const std::int64_t> v);
    bool add(std::span<const std::uint8_t> v);

    int rank() const { return rank_; }
    int dimension() const { return dim_; }
    bool contains(std::span<const Rational> v) const;

private:
    bool add_integer(std::vector<Integer> v);
    bool add_small(std::vector<std::int64_t> v);
    void promote();
    void reduce_big(std::vector<Integer> &v) const;

    int dim_;
    int rank_ = 0;
    bool big_ = false;
    std::vector<std::vector<std::int64_t>> small_rows_;
    std::vector<std::vector<Integer>> big_rows_;
    std::vector<int> pivots_;
};

/**
 * Affine hull built one point at a time: the first point is the origin,
 * later points contribute their difference to it.
 */
class AffineHull {
public:
    explicit AffineHull(int dimension) : space_(dimension) {}

    /// Returns true iff p was affinely independent of the previous points.
    bool add(std::span<const std::uint8_t> p);
    bool add(std::span<const Rational> p);

    /// -1 when no point was added.
    int affine_rank() const { return count_ == 0 ? -1 : space_.rank(); }
    int points() const { return count_; }

private:
    RowSpace space_;
    int count_ = 0;
    std::vector<std::int64_t> origin_small_;
    RationalVector origin_;
};

} // namespace cardpoly

#endif
