#include "frobhh/linalg.hpp"

#include "frobhh/error.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace frobhh {

namespace {

// row_i <- row_i + f * row_p over the column range [from, cols)
void axpy_row(std::uint64_t p, std::span<Scalar> target, std::span<const Scalar> source, std::uint64_t f,
              std::size_t from)
{
    for (std::size_t j = from; j < target.size(); ++j) {
        if (source[j].v == 0)
            continue;
        target[j].v = static_cast<std::uint32_t>((target[j].v + f * source[j].v) % p);
    }
}

}  // namespace

std::vector<std::size_t> rref(const PrimeField& field, DenseMatrix& m)
{
    const std::uint64_t p = field.characteristic();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != r)
            std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
        Scalar inv = field.inv(m(r, c));
        for (auto& x : m.row(r))
            x = field.mul(x, inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            std::uint64_t f = field.neg(m(i, c)).v;
            axpy_row(p, m.row(i), m.row(r), f, c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank_dense(const PrimeField& field, DenseMatrix m)
{
    // forward elimination only
    const std::uint64_t p = field.characteristic();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != r)
            std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
        Scalar inv = field.inv(m(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero())
                continue;
            std::uint64_t f = field.neg(field.mul(m(i, c), inv)).v;
            axpy_row(p, m.row(i), m.row(r), f, c);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const PrimeField& field, const DenseMatrix& m) { return rank_dense(field, m); }

namespace {

class MarkowitzEliminator {
public:
    MarkowitzEliminator(const PrimeField& field, const SparseMatrix& m, const EliminationOptions& options)
        : field_(field), options_(options), rows_(m.rows()), alive_(m.rows(), 0), col_rows_(m.cols()),
          col_count_(m.cols(), 0)
    {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            auto r = m.row(i);
            if (r.empty())
                continue;
            rows_[i].assign(r.begin(), r.end());
            alive_[i] = 1;
            queue_.insert({r.size(), i});
            active_nnz_ += r.size();
            for (const auto& e : r) {
                if (col_count_[e.col]++ == 0)
                    ++active_cols_;
                col_rows_[e.col].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }

    std::size_t run()
    {
        std::size_t rank = 0;
        while (!queue_.empty()) {
            const double area = static_cast<double>(queue_.size()) * static_cast<double>(active_cols_);
            if (static_cast<double>(active_nnz_) >= options_.density_threshold * area &&
                area <= static_cast<double>(options_.dense_entry_limit))
                return rank + dense_finish();
            eliminate_one();
            ++rank;
        }
        return rank;
    }

private:
    static constexpr std::size_t kCandidateRows = 8;

    void retire(std::size_t i)
    {
        queue_.erase({rows_[i].size(), i});
        alive_[i] = 0;
        active_nnz_ -= rows_[i].size();
        for (const auto& e : rows_[i])
            if (--col_count_[e.col] == 0)
                --active_cols_;
    }

    void eliminate_one()
    {
        // Markowitz cost (r - 1)(c - 1) over the sparsest few rows
        std::size_t best_row = 0, best_pos = 0;
        std::uint64_t best_cost = UINT64_MAX;
        std::size_t seen = 0;
        for (auto it = queue_.begin(); it != queue_.end() && seen < kCandidateRows; ++it, ++seen) {
            const auto& row = rows_[it->second];
            for (std::size_t k = 0; k < row.size(); ++k) {
                std::uint64_t cost =
                    static_cast<std::uint64_t>(row.size() - 1) * (col_count_[row[k].col] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = it->second;
                    best_pos = k;
                }
            }
            if (best_cost == 0)
                break;
        }

        const std::vector<SparseEntry> pivot_row = rows_[best_row];
        const std::uint32_t pc = pivot_row[best_pos].col;
        const Scalar pinv = field_.inv(pivot_row[best_pos].value);
        retire(best_row);

        std::vector<std::uint32_t> targets;
        targets.swap(col_rows_[pc]);
        std::vector<SparseEntry> merged;
        for (auto r : targets) {
            if (!alive_[r])
                continue;
            auto& row = rows_[r];
            auto it = std::lower_bound(row.begin(), row.end(), pc,
                                       [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
            if (it == row.end() || it->col != pc)
                continue;
            const Scalar factor = field_.neg(field_.mul(it->value, pinv));

            queue_.erase({row.size(), r});
            active_nnz_ -= row.size();
            merged.clear();
            std::size_t x = 0, y = 0;
            while (x < row.size() || y < pivot_row.size()) {
                if (y == pivot_row.size() || (x < row.size() && row[x].col < pivot_row[y].col)) {
                    merged.push_back(row[x++]);
                } else if (x == row.size() || pivot_row[y].col < row[x].col) {
                    // fill-in
                    const auto c = pivot_row[y].col;
                    merged.push_back({c, field_.mul(factor, pivot_row[y].value)});
                    if (col_count_[c]++ == 0)
                        ++active_cols_;
                    col_rows_[c].push_back(r);
                    ++y;
                } else {
                    Scalar s = field_.fma(row[x].value, factor, pivot_row[y].value);
                    if (s.is_zero()) {
                        if (--col_count_[row[x].col] == 0)
                            --active_cols_;
                    } else {
                        merged.push_back({row[x].col, s});
                    }
                    ++x;
                    ++y;
                }
            }
            row.swap(merged);
            if (row.empty()) {
                alive_[r] = 0;
            } else {
                queue_.insert({row.size(), r});
                active_nnz_ += row.size();
            }
        }
    }

    std::size_t dense_finish()
    {
        std::vector<std::int64_t> col_map(col_count_.size(), -1);
        std::size_t ncols = 0;
        for (std::size_t c = 0; c < col_count_.size(); ++c)
            if (col_count_[c] > 0)
                col_map[c] = static_cast<std::int64_t>(ncols++);
        DenseMatrix block(queue_.size(), ncols);
        std::size_t i = 0;
        for (const auto& [size, r] : queue_) {
            for (const auto& e : rows_[r])
                block(i, static_cast<std::size_t>(col_map[e.col])) = e.value;
            ++i;
        }
        return rank_dense(field_, std::move(block));
    }

    const PrimeField& field_;
    EliminationOptions options_;
    std::vector<std::vector<SparseEntry>> rows_;
    std::vector<char> alive_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<std::uint32_t> col_count_;
    std::set<std::pair<std::size_t, std::size_t>> queue_;
    std::size_t active_nnz_ = 0;
    std::size_t active_cols_ = 0;
};

}  // namespace

std::size_t rank(const PrimeField& field, const SparseMatrix& m, const EliminationOptions& options)
{
    return MarkowitzEliminator(field, m, options).run();
}

std::vector<Vector> kernel_basis(const PrimeField& field, const DenseMatrix& m)
{
    DenseMatrix r = m;
    auto pivots = rref(field, r);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = field.one();
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = field.neg(r(k, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> kernel_basis(const PrimeField& field, const SparseMatrix& m)
{
    return kernel_basis(field, m.to_dense());
}

std::optional<Vector> try_solve(const PrimeField& field, const DenseMatrix& m, const Vector& v)
{
    if (v.size() != m.rows())
        throw Error(ErrorKind::DimensionMismatch, "exactla", "solve: right-hand side length differs from row count");
    DenseMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = v[i];
    }
    auto pivots = rref(field, aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug(k, m.cols());
    return x;
}

Vector solve(const PrimeField& field, const DenseMatrix& m, const Vector& v)
{
    auto x = try_solve(field, m, v);
    if (!x)
        throw Error(ErrorKind::NoSolution, "exactla", "linear system has no solution");
    return *x;
}

Vector solve(const PrimeField& field, const SparseMatrix& m, const Vector& v) { return solve(field, m.to_dense(), v); }

DenseMatrix inverse(const PrimeField& field, const DenseMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "exactla", "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    DenseMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = field.one();
    }
    auto pivots = rref(field, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error(ErrorKind::NotInvertible, "exactla", "matrix is singular");
    DenseMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

DenseMatrix power(const PrimeField& field, const DenseMatrix& m, std::uint64_t e)
{
    DenseMatrix result = DenseMatrix::identity(field, m.rows());
    DenseMatrix base = m;
    while (e > 0) {
        if (e & 1)
            result = multiply(field, result, base);
        e >>= 1;
        if (e)
            base = multiply(field, base, base);
    }
    return result;
}

std::uint64_t matrix_order(const PrimeField& field, const DenseMatrix& m, std::uint64_t cap)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "exactla", "order of a non-square matrix");
    if (rank_dense(field, m) != m.rows())
        throw Error(ErrorKind::NotInvertible, "exactla", "matrix order requested for a singular matrix");
    const DenseMatrix id = DenseMatrix::identity(field, m.rows());
    DenseMatrix x = m;
    for (std::uint64_t r = 1; r <= cap; ++r) {
        if (x == id)
            return r;
        x = multiply(field, x, m);
    }
    throw Error(ErrorKind::CapExceeded, "exactla", "matrix order exceeds cap " + std::to_string(cap));
}

std::vector<std::size_t> independent_columns(const PrimeField& field, const DenseMatrix& m)
{
    DenseMatrix r = m;
    return rref(field, r);
}

}  // namespace frobhh
