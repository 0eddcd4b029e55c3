#include "frobhh/matrix.hpp"

#include "frobhh/error.hpp"

#include <algorithm>
#include <string>

namespace frobhh {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorKind::DimensionMismatch, "exactla", what);
}

}  // namespace

DenseMatrix DenseMatrix::identity(const PrimeField& field, std::size_t n)
{
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = field.one();
    return m;
}

DenseMatrix DenseMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    DenseMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require(columns[j].size() == rows, "column length differs from row count");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

Vector DenseMatrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

DenseMatrix DenseMatrix::transpose() const
{
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool DenseMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s.is_zero(); });
}

DenseMatrix multiply(const PrimeField& field, const DenseMatrix& a, const DenseMatrix& b)
{
    require(a.cols() == b.rows(), "dense product: inner dimensions differ");
    const std::uint64_t p = field.characteristic();
    DenseMatrix c(a.rows(), b.cols());
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a(i, k).v;
            if (aik == 0)
                continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                acc[j] = (acc[j] + aik * brow[j].v) % p;
        }
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(i, j) = Scalar{static_cast<std::uint32_t>(acc[j])};
    }
    return c;
}

DenseMatrix add(const PrimeField& field, const DenseMatrix& a, const DenseMatrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dense sum: shapes differ");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = field.add(a(i, j), b(i, j));
    return c;
}

DenseMatrix subtract(const PrimeField& field, const DenseMatrix& a, const DenseMatrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dense difference: shapes differ");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = field.sub(a(i, j), b(i, j));
    return c;
}

DenseMatrix scale(const PrimeField& field, Scalar s, const DenseMatrix& a)
{
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = field.mul(s, a(i, j));
    return c;
}

Vector apply(const PrimeField& field, const DenseMatrix& a, std::span<const Scalar> x)
{
    require(a.cols() == x.size(), "dense apply: vector length differs from column count");
    const std::uint64_t p = field.characteristic();
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        auto r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc = (acc + static_cast<std::uint64_t>(r[j].v) * x[j].v) % p;
        y[i] = Scalar{static_cast<std::uint32_t>(acc)};
    }
    return y;
}

// ---------------------------------------------------------------------------

void canonicalize_row(const PrimeField& field, std::vector<SparseEntry>& entries)
{
    std::sort(entries.begin(), entries.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.col < y.col; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries.size();) {
        std::uint32_t col = entries[i].col;
        Scalar acc = entries[i].value;
        std::size_t j = i + 1;
        for (; j < entries.size() && entries[j].col == col; ++j)
            acc = field.add(acc, entries[j].value);
        if (!acc.is_zero())
            entries[out++] = SparseEntry{col, acc};
        i = j;
    }
    entries.resize(out);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), row_ptr_(rows + 1, 0) {}

SparseMatrix SparseMatrix::identity(const PrimeField& field, std::size_t n)
{
    SparseMatrix m;
    m.cols_ = n;
    for (std::size_t i = 0; i < n; ++i) {
        SparseEntry e{static_cast<std::uint32_t>(i), field.one()};
        m.append_canonical_row(std::span<const SparseEntry>(&e, 1));
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& d)
{
    SparseMatrix m;
    m.cols_ = d.cols();
    std::vector<SparseEntry> row;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        row.clear();
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!d(i, j).is_zero())
                row.push_back({static_cast<std::uint32_t>(j), d(i, j)});
        m.append_canonical_row(row);
    }
    return m;
}

SparseMatrix SparseMatrix::from_triplets(const PrimeField& field, std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets)
{
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& x, const Triplet& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    SparseMatrix m;
    m.cols_ = cols;
    std::vector<SparseEntry> row;
    std::size_t t = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        row.clear();
        for (; t < triplets.size() && triplets[t].row == i; ++t) {
            require(triplets[t].col < cols, "triplet column out of range");
            row.push_back({triplets[t].col, triplets[t].value});
        }
        canonicalize_row(field, row);
        m.append_canonical_row(row);
    }
    require(t == triplets.size(), "triplet row out of range");
    return m;
}

void SparseMatrix::append_row(const PrimeField& field, std::vector<SparseEntry> entries)
{
    canonicalize_row(field, entries);
    append_canonical_row(entries);
}

void SparseMatrix::append_canonical_row(std::span<const SparseEntry> entries)
{
    for (const auto& e : entries)
        require(e.col < cols_, "sparse entry column out of range");
    entries_.insert(entries_.end(), entries.begin(), entries.end());
    row_ptr_.push_back(entries_.size());
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const
{
    auto r = row(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    return (it != r.end() && it->col == j) ? it->value : Scalar{0};
}

DenseMatrix SparseMatrix::to_dense() const
{
    DenseMatrix d(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& e : row(i))
            d(i, e.col) = e.value;
    return d;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t;
    t.cols_ = rows();
    std::vector<std::size_t> counts(cols_ + 1, 0);
    for (const auto& e : entries_)
        ++counts[e.col + 1];
    for (std::size_t j = 0; j < cols_; ++j)
        counts[j + 1] += counts[j];
    t.row_ptr_ = counts;
    t.entries_.resize(entries_.size());
    std::vector<std::size_t> fill(counts.begin(), counts.end() - 1);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& e : row(i))
            t.entries_[fill[e.col]++] = SparseEntry{static_cast<std::uint32_t>(i), e.value};
    return t;
}

SparseMatrix SparseMatrix::restrict(std::span<const std::uint32_t> row_indices, std::span<const std::int64_t> col_map,
                                    std::size_t local_cols) const
{
    SparseMatrix m;
    m.cols_ = local_cols;
    std::vector<SparseEntry> row_buf;
    for (auto i : row_indices) {
        row_buf.clear();
        for (const auto& e : row(i)) {
            std::int64_t c = col_map[e.col];
            if (c >= 0)
                row_buf.push_back({static_cast<std::uint32_t>(c), e.value});
        }
        std::sort(row_buf.begin(), row_buf.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.col < y.col; });
        m.append_canonical_row(row_buf);
    }
    return m;
}

SparseMatrix multiply(const PrimeField& field, const SparseMatrix& a, const SparseMatrix& b)
{
    require(a.cols() == b.rows(), "sparse product: inner dimensions differ");
    const std::uint64_t p = field.characteristic();
    SparseMatrix c(0, b.cols());
    std::vector<std::uint64_t> acc(b.cols(), 0);
    std::vector<char> touched(b.cols(), 0);
    std::vector<std::uint32_t> cols;
    std::vector<SparseEntry> out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cols.clear();
        for (const auto& ea : a.row(i)) {
            for (const auto& eb : b.row(ea.col)) {
                if (!touched[eb.col]) {
                    touched[eb.col] = 1;
                    cols.push_back(eb.col);
                }
                acc[eb.col] = (acc[eb.col] + static_cast<std::uint64_t>(ea.value.v) * eb.value.v) % p;
            }
        }
        std::sort(cols.begin(), cols.end());
        out.clear();
        for (auto j : cols) {
            if (acc[j] != 0)
                out.push_back({j, Scalar{static_cast<std::uint32_t>(acc[j])}});
            acc[j] = 0;
            touched[j] = 0;
        }
        c.append_canonical_row(out);
    }
    return c;
}

namespace {

SparseMatrix combine(const PrimeField& field, const SparseMatrix& a, const SparseMatrix& b, Scalar factor)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "sparse sum: shapes differ");
    SparseMatrix c(0, a.cols());
    std::vector<SparseEntry> out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out.clear();
        auto ra = a.row(i);
        auto rb = b.row(i);
        std::size_t x = 0, y = 0;
        while (x < ra.size() || y < rb.size()) {
            if (y == rb.size() || (x < ra.size() && ra[x].col < rb[y].col)) {
                out.push_back(ra[x++]);
            } else if (x == ra.size() || rb[y].col < ra[x].col) {
                out.push_back({rb[y].col, field.mul(factor, rb[y].value)});
                ++y;
            } else {
                Scalar s = field.fma(ra[x].value, factor, rb[y].value);
                if (!s.is_zero())
                    out.push_back({ra[x].col, s});
                ++x;
                ++y;
            }
        }
        c.append_canonical_row(out);
    }
    return c;
}

}  // namespace

SparseMatrix add(const PrimeField& field, const SparseMatrix& a, const SparseMatrix& b)
{
    return combine(field, a, b, field.one());
}

SparseMatrix subtract(const PrimeField& field, const SparseMatrix& a, const SparseMatrix& b)
{
    return combine(field, a, b, field.neg(field.one()));
}

SparseMatrix scale(const PrimeField& field, Scalar s, const SparseMatrix& a)
{
    SparseMatrix c(0, a.cols());
    std::vector<SparseEntry> out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out.clear();
        if (!s.is_zero())
            for (const auto& e : a.row(i))
                out.push_back({e.col, field.mul(s, e.value)});
        c.append_canonical_row(out);
    }
    return c;
}

Vector apply(const PrimeField& field, const SparseMatrix& a, std::span<const Scalar> x)
{
    require(a.cols() == x.size(), "sparse apply: vector length differs from column count");
    const std::uint64_t p = field.characteristic();
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (const auto& e : a.row(i))
            acc = (acc + static_cast<std::uint64_t>(e.value.v) * x[e.col].v) % p;
        y[i] = Scalar{static_cast<std::uint32_t>(acc)};
    }
    return y;
}

SparseMatrix block2x2(std::size_t top_rows, std::size_t bottom_rows, std::size_t left_cols, std::size_t right_cols,
                      const SparseMatrix* a, const SparseMatrix* b, const SparseMatrix* c, const SparseMatrix* d)
{
    auto check = [](const SparseMatrix* m, std::size_t r, std::size_t k) {
        require(m == nullptr || (m->rows() == r && m->cols() == k), "block shape mismatch");
    };
    check(a, top_rows, left_cols);
    check(b, top_rows, right_cols);
    check(c, bottom_rows, left_cols);
    check(d, bottom_rows, right_cols);

    SparseMatrix out(0, left_cols + right_cols);
    std::vector<SparseEntry> row;
    auto emit = [&](const SparseMatrix* left, const SparseMatrix* right, std::size_t i) {
        row.clear();
        if (left)
            for (const auto& e : left->row(i))
                row.push_back(e);
        if (right)
            for (const auto& e : right->row(i))
                row.push_back({static_cast<std::uint32_t>(e.col + left_cols), e.value});
        out.append_canonical_row(row);
    };
    for (std::size_t i = 0; i < top_rows; ++i)
        emit(a, b, i);
    for (std::size_t i = 0; i < bottom_rows; ++i)
        emit(c, d, i);
    return out;
}

}  // namespace frobhh
