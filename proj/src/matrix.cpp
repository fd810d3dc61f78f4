#include "siltlab/matrix.hpp"

#include <algorithm>

namespace siltlab {

namespace {

void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw SiltError(ErrorCode::InvalidArgument, "matrices over different fields");
}

}  // namespace

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!field_.is_zero(v)) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!field_.eq(at(i, j), i == j ? field_.one() : field_.zero())) return false;
    return true;
}

Matrix Matrix::add(const Matrix& o) const {
    check_field(*this, o);
    if (!same_shape(o)) throw SiltError(ErrorCode::ShapeMismatch, "add: shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    check_field(*this, o);
    if (!same_shape(o)) throw SiltError(ErrorCode::ShapeMismatch, "sub: shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
    return r;
}

Matrix Matrix::neg() const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.neg(data_[k]);
    return r;
}

Matrix Matrix::scale(const Scalar& c) const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.mul(data_[k], c);
    return r;
}

Matrix Matrix::mul(const Matrix& o) const {
    check_field(*this, o);
    if (cols_ != o.rows_) throw SiltError(ErrorCode::ShapeMismatch, "mul: inner dimensions differ");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (field_.is_zero(a)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.data_[i * o.cols_ + j] =
                    field_.add(r.data_[i * o.cols_ + j], field_.mul(a, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_field(*this, o);
    if (rows_ != o.rows_) throw SiltError(ErrorCode::ShapeMismatch, "hstack: row counts differ");
    Matrix r(rows_, cols_ + o.cols_, field_);
    r.paste(0, 0, *this);
    r.paste(0, cols_, o);
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_field(*this, o);
    if (cols_ != o.cols_) throw SiltError(ErrorCode::ShapeMismatch, "vstack: column counts differ");
    Matrix r(rows_ + o.rows_, cols_, field_);
    r.paste(0, 0, *this);
    r.paste(rows_, 0, o);
    return r;
}

void Matrix::paste(std::size_t i0, std::size_t j0, const Matrix& src) {
    if (i0 + src.rows_ > rows_ || j0 + src.cols_ > cols_)
        throw SiltError(ErrorCode::ShapeMismatch, "paste: target too small");
    for (std::size_t i = 0; i < src.rows_; ++i)
        for (std::size_t j = 0; j < src.cols_; ++j) set(i0 + i, j0 + j, src.at(i, j));
}

Matrix Matrix::submatrix(std::size_t i0, std::size_t j0, std::size_t nrows,
                         std::size_t ncols) const {
    if (i0 + nrows > rows_ || j0 + ncols > cols_)
        throw SiltError(ErrorCode::ShapeMismatch, "submatrix out of range");
    Matrix r(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) r.set(i, j, at(i0 + i, j0 + j));
    return r;
}

std::vector<std::size_t> Matrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows_ && field_.is_zero(at(pivot, col))) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(data_[lead * cols_ + j], data_[pivot * cols_ + j]);
        Scalar piv_inv = field_.inv(at(lead, col));
        for (std::size_t j = col; j < cols_; ++j)
            set(lead, j, field_.mul(at(lead, j), piv_inv));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead || field_.is_zero(at(i, col))) continue;
            Scalar factor = at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                set(i, j, field_.sub(at(i, j), field_.mul(factor, at(lead, j))));
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix tmp = *this;
    return tmp.rref_in_place().size();
}

Matrix Matrix::kernel_basis() const {
    Matrix tmp = *this;
    std::vector<std::size_t> pivots = tmp.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix ker(cols_, free_cols.size(), field_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        ker.set(fc, k, field_.one());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ker.set(pivots[r], k, field_.neg(tmp.at(r, fc)));
    }
    return ker;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    check_field(*this, rhs);
    if (rhs.rows_ != rows_) throw SiltError(ErrorCode::ShapeMismatch, "solve: rhs rows differ");
    Matrix aug = hstack(rhs);
    std::vector<std::size_t> pivots = aug.rref_in_place();
    // Inconsistent iff a pivot lands in the rhs block.
    for (std::size_t p : pivots)
        if (p >= cols_) return std::nullopt;
    Matrix x(cols_, rhs.cols_, field_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols_; ++j) x.set(pivots[r], j, aug.at(r, cols_ + j));
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug = hstack(identity(rows_, field_));
    std::vector<std::size_t> pivots = aug.rref_in_place();
    if (pivots.size() != rows_) return std::nullopt;
    for (std::size_t r = 0; r < rows_; ++r)
        if (pivots[r] != r) return std::nullopt;
    return aug.submatrix(0, cols_, rows_, cols_);
}

std::vector<std::size_t> Matrix::independent_columns() const {
    Matrix tmp = *this;
    return tmp.rref_in_place();
}

Matrix Matrix::column_space_basis() const {
    std::vector<std::size_t> idx = independent_columns();
    Matrix r(rows_, idx.size(), field_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) r.set(i, k, at(i, idx[k]));
    return r;
}

Matrix Matrix::flatten_row() const {
    Matrix r(1, rows_ * cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k];
    return r;
}

bool Matrix::equals(const Matrix& o) const {
    if (!same_shape(o) || field_ != o.field_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!field_.eq(data_[k], o.data_[k])) return false;
    return true;
}

void RowSpace::reduce_in_place(std::vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (field_.is_zero(c)) continue;
        Scalar factor = c;
        for (std::size_t j = pivots_[r]; j < width_; ++j)
            v[j] = field_.sub(v[j], field_.mul(factor, rows_[r][j]));
    }
}

bool RowSpace::add(std::vector<Scalar> v) {
    if (v.size() != width_) throw SiltError(ErrorCode::ShapeMismatch, "RowSpace: width mismatch");
    reduce_in_place(v);
    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (!field_.is_zero(v[j])) {
            piv = j;
            break;
        }
    if (piv == width_) return false;
    Scalar inv = field_.inv(v[piv]);
    for (std::size_t j = piv; j < width_; ++j) v[j] = field_.mul(v[j], inv);
    // Keep earlier rows reduced against the new pivot.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = rows_[r][piv];
        if (field_.is_zero(c)) continue;
        for (std::size_t j = piv; j < width_; ++j)
            rows_[r][j] = field_.sub(rows_[r][j], field_.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
    if (v.size() != width_) throw SiltError(ErrorCode::ShapeMismatch, "RowSpace: width mismatch");
    reduce_in_place(v);
    return v;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
    v = reduce(std::move(v));
    for (const auto& c : v)
        if (!field_.is_zero(c)) return false;
    return true;
}

}  // namespace siltlab
