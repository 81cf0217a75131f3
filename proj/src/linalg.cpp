#include "cardpoly/linalg.hpp"

#include "cardpoly/error.hpp"

#include <algorithm>
#include <numeric>

namespace cardpoly {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
{
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector> &rows)
{
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        require(static_cast<int>(rows[static_cast<std::size_t>(r)].size()) == cols,
                "ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

namespace {

/// Scales a rational row by the lcm of its denominators.
std::vector<Integer> integer_row(std::span<const Rational> row)
{
    Integer lcm = 1;
    for (const Rational &q : row)
        if (q.get_den() != 1)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        out[i] = row[i].get_num() * (lcm / row[i].get_den());
    return out;
}

} // namespace

int rank(const RationalMatrix &m)
{
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<std::vector<Integer>> a;
    a.reserve(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        a.push_back(integer_row(m.row(r)));

    // Bareiss: after step k every entry of the trailing block is a k x k
    // minor, so the division by the previous pivot is exact.
    Integer prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const auto &prow = a[static_cast<std::size_t>(rank)];
        const Integer &p = prow[static_cast<std::size_t>(col)];
        for (int r = rank + 1; r < rows; ++r) {
            auto &row = a[static_cast<std::size_t>(r)];
            const Integer f = row[static_cast<std::size_t>(col)];
            for (int c = col + 1; c < cols; ++c) {
                auto &x = row[static_cast<std::size_t>(c)];
                x = (x * p - f * prow[static_cast<std::size_t>(c)]);
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

int affine_rank(const std::vector<RationalVector> &points)
{
    require(!points.empty(), "affine_rank of an empty point set");
    const std::size_t d = points.front().size();
    AffineHull hull(static_cast<int>(d));
    for (const auto &p : points) {
        require(p.size() == d, "points of different dimension");
        hull.add(std::span<const Rational>(p));
    }
    return hull.affine_rank();
}

bool in_affine_hull(const RationalVector &y, const std::vector<RationalVector> &points)
{
    require(!points.empty(), "in_affine_hull needs at least one point");
    const std::size_t d = points.front().size();
    require(y.size() == d, "dimension mismatch between y and points");
    RowSpace space(static_cast<int>(d));
    for (const auto &p : points) {
        require(p.size() == d, "points of different dimension");
        RationalVector diff(d);
        for (std::size_t i = 0; i < d; ++i)
            diff[i] = p[i] - points.front()[i];
        space.add(std::span<const Rational>(diff));
    }
    RationalVector diff(d);
    for (std::size_t i = 0; i < d; ++i)
        diff[i] = y[i] - points.front()[i];
    return space.contains(diff);
}

// ---------------------------------------------------------------------------

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

int first_nonzero(const std::vector<std::int64_t> &v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            return static_cast<int>(i);
    return -1;
}

int first_nonzero(const std::vector<Integer> &v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            return static_cast<int>(i);
    return -1;
}

void make_primitive(std::vector<std::int64_t> &v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto &x : v)
            x /= g;
}

void make_primitive(std::vector<Integer> &v)
{
    Integer g = 0;
    for (const auto &x : v)
        if (x != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto &x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Eliminates v against basis row b at pivot column pc: v := b[pc]*v - v[pc]*b.
void eliminate(std::vector<std::int64_t> &v, const std::vector<std::int64_t> &b, int pc)
{
    const std::int64_t f = v[static_cast<std::size_t>(pc)];
    if (f == 0)
        return;
    const std::int64_t p = b[static_cast<std::size_t>(pc)];
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (b[i] == 0) {
            if (v[i] != 0 && p != 1)
                v[i] = checked_mul(v[i], p);
            continue;
        }
        v[i] = checked_sub(p == 1 ? v[i] : checked_mul(v[i], p), checked_mul(f, b[i]));
    }
    make_primitive(v);
}

void eliminate(std::vector<Integer> &v, const std::vector<Integer> &b, int pc)
{
    const Integer f = v[static_cast<std::size_t>(pc)];
    if (f == 0)
        return;
    const Integer &p = b[static_cast<std::size_t>(pc)];
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = v[i] * p - f * b[i];
    make_primitive(v);
}

} // namespace

RowSpace::RowSpace(int dimension) : dim_(dimension)
{
    require(dimension >= 0, "negative dimension");
}

bool RowSpace::add(std::span<const Rational> v)
{
    require(static_cast<int>(v.size()) == dim_, "row of wrong dimension");
    return add_integer(integer_row(v));
}

bool RowSpace::add(std::span<const std::uint8_t> v)
{
    require(static_cast<int>(v.size()) == dim_, "row of wrong dimension");
    return add_small(std::vector<std::int64_t>(v.begin(), v.end()));
}

bool RowSpace::add(std::span<const std::int64_t> v)
{
    require(static_cast<int>(v.size()) == dim_, "row of wrong dimension");
    return add_small(std::vector<std::int64_t>(v.begin(), v.end()));
}

bool RowSpace::add_integer(std::vector<Integer> v)
{
    if (!big_) {
        std::vector<std::int64_t> s(v.size());
        bool fits = true;
        for (std::size_t i = 0; i < v.size() && fits; ++i) {
            if (!v[i].fits_slong_p())
                fits = false;
            else
                s[i] = v[i].get_si();
        }
        if (fits)
            return add_small(std::move(s));
        promote();
    }
    reduce_big(v);
    const int pc = first_nonzero(v);
    if (pc < 0)
        return false;
    big_rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    ++rank_;
    return true;
}

bool RowSpace::add_small(std::vector<std::int64_t> v)
{
    if (big_) {
        std::vector<Integer> b(v.begin(), v.end());
        return add_integer(std::move(b));
    }
    std::vector<std::int64_t> work = v;
    try {
        for (std::size_t k = 0; k < small_rows_.size(); ++k)
            eliminate(work, small_rows_[k], pivots_[k]);
    } catch (const Overflow &) {
        promote();
        std::vector<Integer> b(v.begin(), v.end());
        return add_integer(std::move(b));
    }
    const int pc = first_nonzero(work);
    if (pc < 0)
        return false;
    small_rows_.push_back(std::move(work));
    pivots_.push_back(pc);
    ++rank_;
    return true;
}

void RowSpace::promote()
{
    if (big_)
        return;
    big_ = true;
    for (const auto &r : small_rows_)
        big_rows_.emplace_back(r.begin(), r.end());
    small_rows_.clear();
}

void RowSpace::reduce_big(std::vector<Integer> &v) const
{
    for (std::size_t k = 0; k < big_rows_.size(); ++k)
        eliminate(v, big_rows_[k], pivots_[k]);
}

bool RowSpace::contains(std::span<const Rational> v) const
{
    require(static_cast<int>(v.size()) == dim_, "row of wrong dimension");
    std::vector<Integer> w = integer_row(v);
    if (big_) {
        reduce_big(w);
    } else {
        for (std::size_t k = 0; k < small_rows_.size(); ++k) {
            std::vector<Integer> b(small_rows_[k].begin(), small_rows_[k].end());
            eliminate(w, b, pivots_[k]);
        }
    }
    return first_nonzero(w) < 0;
}

// ---------------------------------------------------------------------------

bool AffineHull::add(std::span<const std::uint8_t> p)
{
    if (count_++ == 0) {
        origin_small_.assign(p.begin(), p.end());
        origin_.clear();
        return true;
    }
    if (!origin_small_.empty() || space_.dimension() == 0) {
        std::vector<std::int64_t> diff(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            diff[i] = static_cast<std::int64_t>(p[i]) - origin_small_[i];
        return space_.add(std::span<const std::int64_t>(diff));
    }
    RationalVector diff(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        diff[i] = Rational(p[i]) - origin_[i];
    return space_.add(std::span<const Rational>(diff));
}

bool AffineHull::add(std::span<const Rational> p)
{
    if (count_++ == 0) {
        origin_.assign(p.begin(), p.end());
        origin_small_.clear();
        return true;
    }
    RationalVector diff(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        diff[i] = p[i] - (origin_.empty() ? Rational(origin_small_[i]) : origin_[i]);
    return space_.add(std::span<const Rational>(diff));
}

} // namespace cardpoly
