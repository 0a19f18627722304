#include <cctype>

#include "fano/quintic.hpp"

namespace fano::quintic {

namespace {

struct Literal {
  const char* key;
  const char* value;
};

// A_ijk = [v_i, eps_jk], keyed "ijk".
constexpr Literal kATable[] = {
    {"101", "0"},           {"102", "-3e02"},       {"103", "e03"},         {"104", "-e04"},
    {"105", "-4e05"},       {"108", "2e08"},        {"112", "-e12"},        {"113", "3e13"},
    {"114", "e14"},         {"115", "-2e15"},       {"118", "4e18"},        {"123", "0"},
    {"124", "-2e24"},       {"125", "-5e25"},       {"128", "e28"},         {"134", "2e34"},
    {"135", "-e35"},        {"138", "5e38"},        {"145", "-3e45"},       {"148", "3e48"},
    {"158", "0"},

    {"201", "3e04-e12"},    {"202", "3e05"},        {"203", "-5e01+e23"},   {"204", "e24"},
    {"205", "e25"},         {"208", "-e03+e28"},    {"212", "3e15-3e24"},   {"213", "-3e34"},
    {"214", "-2e01"},       {"215", "3e45"},        {"218", "-e13+3e48"},   {"223", "5e12-3e35"},
    {"224", "-2e02-3e45"},  {"225", "0"},           {"228", "-e23+3e58"},   {"234", "-2e03-5e14"},
    {"235", "-5e15"},       {"238", "-5e18"},       {"245", "2e05"},        {"248", "2e08+e34"},
    {"258", "e35"},

    {"301", "e03+3e14"},    {"302", "3e24"},        {"303", "3e08+3e34"},   {"304", "-2e01"},
    {"305", "-e02-3e45"},   {"308", "-3e48"},       {"312", "5e01-e23"},    {"313", "3e18"},
    {"314", "e34"},         {"315", "-e12+e35"},    {"318", "e38"},         {"323", "-5e03+3e28"},
    {"324", "-5e04+2e12"},  {"325", "-5e05"},       {"328", "-5e08"},       {"334", "2e13-3e48"},
    {"335", "e23-3e58"},    {"338", "0"},           {"345", "-2e15+e24"},   {"348", "-2e18"},
    {"358", "-e28"},
};

// B_ijkl = (1/2)[eps_ij, eps_kl], keyed "ijkl".
constexpr Literal kBTable[] = {
    {"0123", "-z01+z23"},     {"0124", "-z15"},         {"0125", "-z25"},        {"0128", "-2z03-z28"},
    {"0134", "-z08"},         {"0135", "2z12+z35"},     {"0138", "z38"},         {"0145", "z45"},
    {"0148", "-z48"},         {"0158", "2z01-2z58"},    {"0234", "-z12+z35"},    {"0235", "z05-z22"},
    {"0238", "z08+3z11"},     {"0245", "z55"},          {"0248", "-z01-z58"},    {"0258", "-z02+2z45"},
    {"0345", "-z00-2z15"},    {"0348", "2z18"},         {"0358", "3z03+4z28"},   {"0458", "z12+z35"},
    {"1234", "-z03+z28"},     {"1235", "-3z00-z15"},    {"1238", "-z18+z33"},    {"1245", "-2z05"},
    {"1248", "2z08+z11"},     {"1258", "-3z12-4z35"},   {"1345", "z01+z58"},     {"1348", "-z88"},
    {"1358", "z13+2z48"},     {"1458", "z03+z28"},      {"2345", "-2z02-z45"},   {"2348", "-2z13+z48"},
    {"2358", "-5z01-z23+2z58"}, {"2458", "2z00-z15"},   {"3458", "-z08+2z11"},
};

int digit(char c) { return c - '0'; }

ProjectiveVectorField field(std::initializer_list<std::pair<int, const char*>> components) {
  ProjectiveVectorField v;
  for (const auto& [index, text] : components) v.components[index] = parse_polynomial(text);
  return v;
}

}  // namespace

Combination parse_combination(std::string_view text, char basis_letter) {
  Combination out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&] { throw Error(ErrorCode::ParseError, "bad combination: " + std::string(text)); };
  skip();
  if (text.substr(pos) == "0") return out;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!out.empty()) {
      fail();
    }
    long coefficient = 0;
    bool has_digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coefficient = coefficient * 10 + digit(text[pos++]);
      has_digits = true;
    }
    if (!has_digits) coefficient = 1;
    if (pos + 3 > text.size() || text[pos] != basis_letter) fail();
    if (!std::isdigit(static_cast<unsigned char>(text[pos + 1])) ||
        !std::isdigit(static_cast<unsigned char>(text[pos + 2])))
      fail();
    out.emplace_back(Rational(sign * coefficient), IndexPair{digit(text[pos + 1]), digit(text[pos + 2])});
    pos += 3;
    skip();
  }
  return out;
}

const QuinticTables& QuinticTables::standard() {
  static const QuinticTables tables = [] {
    QuinticTables t;
    for (const auto& [key, value] : kATable) t.set_a(digit(key[0]), digit(key[1]), digit(key[2]), parse_combination(value, 'e'));
    for (const auto& [key, value] : kBTable)
      t.set_b({digit(key[0]), digit(key[1]), digit(key[2]), digit(key[3])}, parse_combination(value, 'z'));
    return t;
  }();
  return tables;
}

const std::array<ProjectiveVectorField, 3>& vector_fields() {
  static const std::array<ProjectiveVectorField, 3> fields{
      field({{1, "2*Z_1"}, {6, "-2*Z_1"}, {2, "-Z_2"}, {3, "3*Z_3"}, {4, "Z_4"}, {9, "-Z_4"}, {5, "-2*Z_5"}, {8, "4*Z_8"}}),
      field({{0, "Z_2"}, {7, "-Z_2"}, {1, "3*Z_4"}, {6, "-3*Z_4"}, {2, "3*Z_5"}, {3, "-5*Z_1"}, {4, "2*Z_0"},
             {9, "-2*Z_0"}, {8, "-Z_3"}}),
      field({{0, "-3*Z_4"}, {7, "3*Z_4"}, {1, "Z_3"}, {6, "-Z_3"}, {2, "-5*Z_0"}, {3, "3*Z_8"}, {4, "-2*Z_1"},
             {9, "2*Z_1"}, {5, "-Z_2"}}),
  };
  return fields;
}

const std::array<std::array<Polynomial, 3>, 3>& vector_field_chart_forms() {
  static const std::array<std::array<Polynomial, 3>, 3> forms{{
      {parse_polynomial("-2*x_1"), parse_polynomial("-x_3"), parse_polynomial("-3*x_4")},
      {parse_polynomial("x_1*x_3+3*x_4"), parse_polynomial("x_3^2-5*x_1"), parse_polynomial("-(2*x_1^2+x_3*x_4)")},
      {parse_polynomial("x_3"), parse_polynomial("3"), parse_polynomial("-2*x_1")},
  }};
  return forms;
}

const std::array<Polynomial, 5>& quadrics() {
  static const std::array<Polynomial, 5> p{
      parse_polynomial("Z_0*Z_7 - Z_1*Z_5 + Z_2*Z_4"), parse_polynomial("Z_0*Z_8 - Z_1*Z_6 + Z_3*Z_4"),
      parse_polynomial("Z_0*Z_9 - Z_2*Z_6 + Z_3*Z_5"), parse_polynomial("Z_1*Z_9 - Z_2*Z_8 + Z_3*Z_7"),
      parse_polynomial("Z_4*Z_9 - Z_8*Z_5 + Z_6*Z_7"),
  };
  return p;
}

const std::array<Polynomial, 3>& hyperplanes() {
  static const std::array<Polynomial, 3> l{parse_polynomial("Z_0 + Z_7"), parse_polynomial("Z_4 + Z_9"),
                                           parse_polynomial("Z_1 + Z_6")};
  return l;
}

const std::map<int, Polynomial>& chart_relations() {
  static const std::map<int, Polynomial> r{
      {0, parse_polynomial("-x_1^2 - x_3*x_4")},
      {2, parse_polynomial("-x_1*x_4 + x_3*x_1^2 + x_3^2*x_4")},
      {5, parse_polynomial("-x_1^3 - x_4^2 - x_1*x_3*x_4")},
      {6, parse_polynomial("-x_1")},
      {7, parse_polynomial("x_1^2 + x_3*x_4")},
      {9, parse_polynomial("-x_4")},
  };
  return r;
}

}  // namespace fano::quintic
