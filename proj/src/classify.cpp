#include "ga/classify.hpp"

#include <array>
#include <sstream>

#include "ga/multivector.hpp"
#include "json.hpp"

namespace ga {

namespace {

// Clifford clock read counterclockwise from the top: index (p-q) mod 8.
constexpr std::array<BuildingBlock, 8> kClock = {
    BuildingBlock::R,  BuildingBlock::R2, BuildingBlock::R,  BuildingBlock::C,
    BuildingBlock::Q,  BuildingBlock::Q2, BuildingBlock::Q,  BuildingBlock::C};

int block_log2_dim(BuildingBlock b) {
  switch (b) {
    case BuildingBlock::R: return 0;
    case BuildingBlock::R2:
    case BuildingBlock::C: return 1;
    case BuildingBlock::C2:
    case BuildingBlock::Q: return 2;
    case BuildingBlock::Q2: return 3;
  }
  throw Error("unreachable building block");
}

}  // namespace

int block_real_dim(BuildingBlock b) { return 1 << block_log2_dim(b); }

std::string block_name(BuildingBlock b) {
  switch (b) {
    case BuildingBlock::R: return "R";
    case BuildingBlock::R2: return "2R";
    case BuildingBlock::C: return "C";
    case BuildingBlock::C2: return "2C";
    case BuildingBlock::Q: return "Q";
    case BuildingBlock::Q2: return "2Q";
  }
  throw Error("unreachable building block");
}

std::string MatrixAlgebraShape::str() const {
  if (size == 1) return block_name(block);
  return "M" + std::to_string(size) + "(" + block_name(block) + ")";
}

MatrixAlgebraShape classify_real(int p, int q) {
  if (p < 0 || q < 0) throw Error("classify_real requires p,q >= 0");
  BuildingBlock b = kClock[((p - q) % 8 + 8) % 8];
  int n = p + q;
  int d = block_log2_dim(b);
  // N^2 * 2^d = 2^n, and n - d is always even on the clock.
  return {b, 1 << ((n - d) / 2)};
}

MatrixAlgebraShape classify_complex(int n) {
  if (n < 0) throw Error("classify_complex requires n >= 0");
  if (n % 2 == 0) return {BuildingBlock::C, 1 << (n / 2)};
  return {BuildingBlock::C2, 1 << ((n - 1) / 2)};
}

ClockWalk clock_walk(int p, int q) {
  ClockWalk walk{p, q, {}, classify_real(p, q)};
  int hour = 0;  // start at R, the top of the clock
  for (int step = 0; step < q; ++step) {
    hour = (hour + 7) % 8;
    walk.steps.push_back({true, kClock[hour]});
  }
  for (int step = 0; step < p; ++step) {
    hour = (hour + 1) % 8;
    walk.steps.push_back({false, kClock[hour]});
  }
  return walk;
}

int pseudoscalar_square_sign(int p, int q) {
  Signature sig(p, q);
  Multivector i2 = Multivector::pseudoscalar(sig) * Multivector::pseudoscalar(sig);
  return i2.scalar_part().re.sgn();
}

namespace {

nlohmann::json table1_json() {
  nlohmann::json entries = nlohmann::json::array();
  for (int n = 0; n <= 7; ++n) {
    for (int p = n; p >= 0; --p) {
      int q = n - p;
      MatrixAlgebraShape s = classify_real(p, q);
      entries.push_back({{"p", p},
                         {"q", q},
                         {"n", n},
                         {"block", block_name(s.block)},
                         {"matrix_size", s.size}});
    }
  }
  return entries;
}

std::string table1_text() {
  constexpr int width = 9;
  auto pad = [](const std::string& s, int w) {
    std::string out = s;
    while (static_cast<int>(out.size()) < w) out += ' ';
    return out;
  };
  std::ostringstream os;
  os << pad("n\\(p-q)", width);
  for (int c = 7; c >= -7; --c) os << pad(std::to_string(c), width);
  os << "\n";
  for (int n = 0; n <= 7; ++n) {
    os << pad(std::to_string(n), width);
    for (int c = 7; c >= -7; --c) {
      if (std::abs(c) > n || (n - c) % 2 != 0) {
        os << pad("", width);
        continue;
      }
      int p = (n + c) / 2;
      os << pad(classify_real(p, n - p).str(), width);
    }
    os << "\n";
  }
  os << pad("i^2", width);
  for (int c = 7; c >= -7; --c) {
    int p = c >= 0 ? c : 0;
    int q = c >= 0 ? 0 : -c;
    os << pad(pseudoscalar_square_sign(p, q) > 0 ? "+" : "-", width);
  }
  os << "\n";
  return os.str();
}

std::string table4_text() {
  std::ostringstream os;
  for (int n = 0; n <= 7; ++n) os << (n ? "  " : "") << "G" << n << "(C)";
  os << "\n";
  for (int n = 0; n <= 7; ++n) os << (n ? ", " : "") << classify_complex(n).str();
  os << "\n";
  return os.str();
}

nlohmann::json table4_json() {
  nlohmann::json entries = nlohmann::json::array();
  for (int n = 0; n <= 7; ++n) {
    MatrixAlgebraShape s = classify_complex(n);
    entries.push_back({{"n", n}, {"block", block_name(s.block)}, {"matrix_size", s.size}});
  }
  return entries;
}

std::string clock_text() {
  // Eight hours, clockwise from the top.
  std::ostringstream os;
  os << "          R\n"
     << "    2R         C\n"
     << "  R               Q\n"
     << "    C          2Q\n"
     << "          Q\n"
     << "clockwise from top: R, C, Q, 2Q, Q, C, R, 2R\n";
  return os.str();
}

nlohmann::json clock_json() {
  nlohmann::json hours = nlohmann::json::array();
  for (int h = 0; h < 8; ++h) hours.push_back(block_name(kClock[(8 - h) % 8]));
  return {{"hours_clockwise_from_top", hours}};
}

}  // namespace

std::string emit_tables(TableKind which, DocFormat format) {
  if (format == DocFormat::Json) {
    nlohmann::json doc;
    switch (which) {
      case TableKind::Table1: doc = table1_json(); break;
      case TableKind::Table4: doc = table4_json(); break;
      case TableKind::Clock: doc = clock_json(); break;
    }
    return doc.dump(2) + "\n";
  }
  switch (which) {
    case TableKind::Table1: return table1_text();
    case TableKind::Table4: return table4_text();
    case TableKind::Clock: return clock_text();
  }
  throw Error("unreachable table kind");
}

}  // namespace ga
