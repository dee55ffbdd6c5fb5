#pragma once

// Matrix text format:
//   line 1: domain tag    Q | GF <p> | Zn <n> | Z
//   line 2: <rows> <cols>
//   then `rows` lines of `cols` whitespace-separated scalar literals.
// Blank lines and `#` comments are ignored; encoding is ASCII.
// Scalar literals: integers like -3, rationals num/den with den > 0,
// modular/field values as nonnegative integers reduced mod the modulus.

#include <iosfwd>
#include <string>
#include <variant>

#include "matrix.hpp"

namespace drz {

using AnyMatrix =
    std::variant<Matrix<Rational>, Matrix<Fp>, Matrix<Zn>, Matrix<Int>>;

AnyMatrix load_matrix(std::istream& in);
AnyMatrix load_matrix_file(const std::string& path);

template <Scalar S>
void print_matrix(std::ostream& out, const Matrix<S>& m);

Domain any_domain(const AnyMatrix& m);
int any_rows(const AnyMatrix& m);
int any_cols(const AnyMatrix& m);
void print_any(std::ostream& out, const AnyMatrix& m);

}  // namespace drz
