#pragma once

#include <cstdint>
#include <vector>

namespace rlnc::gf {

/// Element of GF(2^8), the byte field the codec operates in.
using Element = std::uint8_t;

/// Reduction polynomial x^8 + x^4 + x^3 + x^2 + 1. Only the field size is
/// fixed by the transmission format; this polynomial is the conventional
/// choice and all arithmetic is defined against it.
inline constexpr unsigned kReductionPoly = 0x11D;

/// Addition and subtraction coincide: carry-less XOR.
inline Element add(Element a, Element b) { return static_cast<Element>(a ^ b); }
inline Element sub(Element a, Element b) { return static_cast<Element>(a ^ b); }

/// Product via log/antilog tables built once at startup.
Element mul(Element a, Element b);

/// Multiplicative inverse; a must be nonzero.
Element inv(Element a);

/// a / b with b nonzero.
Element div(Element a, Element b);

/// Dense matrix over GF(2^8), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Element& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
    Element at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }

    bool operator==(const Matrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Element> cells_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

/// Row rank via Gaussian elimination on a working copy.
int rank(const Matrix& m);

/// Solves coeffs * X = rhs for a square full-rank coefficient matrix.
/// Throws SingularMatrix when rank(coeffs) < coeffs.rows(), which signals
/// an undecodable code instance.
Matrix solve(const Matrix& coeffs, const Matrix& rhs);

}  // namespace rlnc::gf
