#include "rlnc/gf256.hpp"

#include "rlnc/errors.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace rlnc::gf {

namespace {

struct Tables {
    std::array<Element, 256> exp_;  // exp_[i] = g^i, duplicated past 255 to skip one modulo
    std::array<Element, 512> expExt_;
    std::array<int, 256> log_;

    Tables() {
        unsigned x = 1;
        for (int i = 0; i < 255; ++i) {
            exp_[static_cast<std::size_t>(i)] = static_cast<Element>(x);
            log_[x] = i;
            x <<= 1;
            if (x & 0x100U) x ^= kReductionPoly;
        }
        exp_[255] = exp_[0];
        log_[0] = 0;  // never read: mul/div/inv special-case zero
        for (int i = 0; i < 512; ++i) expExt_[static_cast<std::size_t>(i)] = exp_[static_cast<std::size_t>(i % 255)];
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

Element mul(Element a, Element b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.expExt_[static_cast<std::size_t>(t.log_[a] + t.log_[b])];
}

Element inv(Element a) {
    if (a == 0) throw std::invalid_argument("gf::inv: zero has no inverse");
    const Tables& t = tables();
    return t.exp_[static_cast<std::size_t>((255 - t.log_[a]) % 255)];
}

Element div(Element a, Element b) {
    if (b == 0) throw std::invalid_argument("gf::div: division by zero");
    if (a == 0) return 0;
    const Tables& t = tables();
    return t.expExt_[static_cast<std::size_t>(t.log_[a] - t.log_[b] + 255)];
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("gf::multiply: dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int l = 0; l < a.cols(); ++l) {
            const Element ail = a.at(i, l);
            if (ail == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) = add(out.at(i, j), mul(ail, b.at(l, j)));
        }
    }
    return out;
}

int rank(const Matrix& m) {
    Matrix w = m;
    int r = 0;
    for (int col = 0; col < w.cols() && r < w.rows(); ++col) {
        int pivot = -1;
        for (int row = r; row < w.rows(); ++row) {
            if (w.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int c = col; c < w.cols(); ++c) std::swap(w.at(pivot, c), w.at(r, c));
        const Element invPivot = inv(w.at(r, col));
        for (int row = r + 1; row < w.rows(); ++row) {
            const Element factor = mul(w.at(row, col), invPivot);
            if (factor == 0) continue;
            for (int c = col; c < w.cols(); ++c)
                w.at(row, c) = add(w.at(row, c), mul(factor, w.at(r, c)));
        }
        ++r;
    }
    return r;
}

Matrix solve(const Matrix& coeffs, const Matrix& rhs) {
    if (coeffs.rows() != coeffs.cols()) throw std::invalid_argument("gf::solve: coefficient matrix must be square");
    if (coeffs.rows() != rhs.rows()) throw std::invalid_argument("gf::solve: row count mismatch");
    const int n = coeffs.rows();
    const int w = rhs.cols();
    Matrix a = coeffs;
    Matrix x = rhs;

    // Gauss-Jordan with partial pivot search (any nonzero pivot works in a field).
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (a.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrix("coefficient matrix is rank deficient");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            for (int c = 0; c < w; ++c) std::swap(x.at(pivot, c), x.at(col, c));
        }
        const Element invPivot = inv(a.at(col, col));
        for (int c = 0; c < n; ++c) a.at(col, c) = mul(a.at(col, c), invPivot);
        for (int c = 0; c < w; ++c) x.at(col, c) = mul(x.at(col, c), invPivot);
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const Element factor = a.at(row, col);
            if (factor == 0) continue;
            for (int c = 0; c < n; ++c)
                a.at(row, c) = add(a.at(row, c), mul(factor, a.at(col, c)));
            for (int c = 0; c < w; ++c)
                x.at(row, c) = add(x.at(row, c), mul(factor, x.at(col, c)));
        }
    }
    return x;
}

}  // namespace rlnc::gf
