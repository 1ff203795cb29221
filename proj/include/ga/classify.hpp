#pragma once

#include <string>
#include <vector>

#include "ga/signature.hpp"

namespace ga {

// The six building-block rings matrix algebras are formed over. R2/C2/Q2 are
// the double rings (pairs with componentwise operations); hyperbolic numbers
// are reported as R2.
enum class BuildingBlock { R, R2, C, C2, Q, Q2 };

int block_real_dim(BuildingBlock b);          // 1, 2, 2, 4, 4, 8
std::string block_name(BuildingBlock b);      // "R", "2R", "C", "2C", "Q", "2Q"

struct MatrixAlgebraShape {
  BuildingBlock block;
  int size;  // matrix is size x size; always a power of two

  bool operator==(const MatrixAlgebraShape&) const = default;
  std::string str() const;  // "M4(2R)", or just "Q" when size == 1
};

// Block ring of G(p,q): the Clifford clock read at hour (p-q) mod 8.
MatrixAlgebraShape classify_real(int p, int q);

// Complex algebras G_n(C): M_{2^(n/2)}(C) for even n, M_{2^((n-1)/2)}(2C) for odd.
MatrixAlgebraShape classify_complex(int n);

struct ClockStep {
  bool clockwise;
  BuildingBlock hour;
};

struct ClockWalk {
  int p;
  int q;
  std::vector<ClockStep> steps;  // q clockwise steps, then p counterclockwise
  MatrixAlgebraShape final;
};

ClockWalk clock_walk(int p, int q);

enum class TableKind { Table1, Clock, Table4 };
enum class DocFormat { Text, Json };

// Renders the classification tables. Table1 covers every (p,q) with p+q <= 7
// (36 entries); Table4 covers n = 0..7. Text mode mirrors the triangular
// layout and appends the pseudoscalar-square sign row, computed from the
// constructed algebras rather than hardcoded.
std::string emit_tables(TableKind which, DocFormat format);

// Sign of the squared pseudoscalar of G(p,q); +1 or -1.
int pseudoscalar_square_sign(int p, int q);

}  // namespace ga
