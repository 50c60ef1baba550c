#include "hopfcat/hopf_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hopfcat/errors.hpp"

namespace hopfcat {

namespace {

using nlohmann::json;

struct Position {
  std::size_t line;
  std::size_t column;
};

Position position_of(std::string_view text, std::size_t byte) {
  Position p{1, 1};
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Structure errors carry no byte offset, so they point at the key in the text.
[[noreturn]] void structure_error(std::string_view text, const std::string& key, const std::string& what) {
  std::size_t at = text.find("\"" + key + "\"");
  Position p = position_of(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(what, p.line, p.column);
}

std::string integer_text(const json& v) {
  if (v.is_number_integer()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  throw std::invalid_argument("expected an integer");
}

Scalar read_scalar(const FieldSpec& k, const json& num, const json* den) {
  if (den && k.is_prime_field()) throw std::invalid_argument("denominators are not allowed over Fp");
  return Scalar::parse(k, integer_text(num), den ? integer_text(*den) : "1");
}

std::size_t read_index(const json& v, std::size_t bound) {
  if (!v.is_number_unsigned()) throw std::invalid_argument("expected a non-negative index");
  auto i = v.get<std::uint64_t>();
  if (i >= bound) throw std::invalid_argument("index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i);
}

// Tuples of `arity` indices followed by a coefficient.
template <class F>
void read_tuples(std::string_view text, const json& doc, const char* key, std::size_t arity, std::size_t dim,
                 const FieldSpec& k, F&& sink) {
  if (!doc.contains(key) || !doc[key].is_array()) structure_error(text, key, std::string("missing array '") + key + "'");
  const std::size_t width = arity + (k.is_prime_field() ? 1 : 2);
  for (const json& t : doc[key]) {
    try {
      if (!t.is_array() || t.size() != width) {
        throw std::invalid_argument("expected tuples of length " + std::to_string(width));
      }
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < arity; ++i) idx.push_back(read_index(t[i], dim));
      Scalar c = read_scalar(k, t[arity], k.is_prime_field() ? nullptr : &t[arity + 1]);
      sink(idx, c);
    } catch (const std::invalid_argument& e) {
      structure_error(text, key, std::string("in '") + key + "': " + e.what());
    }
  }
}

std::vector<Scalar> read_list(std::string_view text, const json& doc, const char* key, std::size_t dim,
                              const FieldSpec& k) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != dim) {
    structure_error(text, key, std::string("'") + key + "' must list " + std::to_string(dim) + " coefficients");
  }
  std::vector<Scalar> out;
  for (const json& v : doc[key]) {
    try {
      if (k.is_prime_field()) {
        out.push_back(read_scalar(k, v, nullptr));
      } else {
        if (!v.is_array() || v.size() != 2) throw std::invalid_argument("expected [numerator, denominator]");
        out.push_back(read_scalar(k, v[0], &v[1]));
      }
    } catch (const std::invalid_argument& e) {
      structure_error(text, key, std::string("in '") + key + "': " + e.what());
    }
  }
  return out;
}

std::string integer_json(const std::string& digits) {
  // Integers beyond 64 bits are written as strings.
  try {
    std::size_t used = 0;
    long long v = std::stoll(digits, &used);
    if (used == digits.size()) return std::to_string(v);
  } catch (const std::out_of_range&) {
  }
  return json(digits).dump();
}

std::string coefficient(const Scalar& c, bool prime) {
  if (prime) return integer_json(c.numerator_string());
  return integer_json(c.numerator_string()) + ", " + integer_json(c.denominator_string());
}

void write_block(std::ostringstream& out, const char* key, const std::vector<std::string>& rows, bool last) {
  out << "  \"" << key << "\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ",\n    " : "\n    ") << rows[i];
  out << (rows.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

}  // namespace

HopfPtr parse_hopf(std::string_view text, AxiomReport* report) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Position p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("syntax error: " + std::string(e.what()), p.line, p.column);
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 1, 1);
  if (!doc.contains("format_version")) structure_error(text, "format_version", "missing 'format_version'");
  if (doc["format_version"] != "1") {
    throw VersionMismatchError("unsupported format_version " + doc["format_version"].dump() + ", expected \"1\"");
  }

  FieldSpec k;
  try {
    const json& f = doc.at("field");
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "Q") {
      k = FieldSpec::rationals();
    } else if (kind == "Fp") {
      k = FieldSpec::prime(f.at("p").get<std::uint64_t>());
    } else {
      throw std::invalid_argument("unknown field kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    structure_error(text, "field", std::string("bad 'field': ") + e.what());
  } catch (const std::invalid_argument& e) {
    structure_error(text, "field", std::string("bad 'field': ") + e.what());
  } catch (const InvalidPrimeError& e) {
    structure_error(text, "field", std::string("bad 'field': ") + e.what());
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::uint64_t>() == 0) {
    structure_error(text, "dim", "'dim' must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["dim"].get<std::uint64_t>());
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) structure_error(text, "name", "'name' must be a string");
    name = doc["name"].get<std::string>();
  }

  std::vector<Accumulator> mult(n * n, Accumulator(k, n));
  std::vector<Accumulator> comult(n, Accumulator(k, n * n));
  std::vector<Accumulator> antipode(n, Accumulator(k, n));
  read_tuples(text, doc, "mult", 3, n, k, [&](const auto& i, const Scalar& c) { mult[i[0] * n + i[1]].add(i[2], c); });
  read_tuples(text, doc, "comult", 3, n, k,
              [&](const auto& i, const Scalar& c) { comult[i[0]].add(i[1] * n + i[2], c); });
  read_tuples(text, doc, "antipode", 2, n, k, [&](const auto& i, const Scalar& c) { antipode[i[0]].add(i[1], c); });

  HopfAlgebra::Columns cols;
  cols.unit = SparseVec::from_dense(read_list(text, doc, "unit", n, k));
  cols.counit = read_list(text, doc, "counit", n, k);
  for (auto& a : mult) cols.mult.push_back(a.take());
  for (auto& a : comult) cols.comult.push_back(a.take());
  for (auto& a : antipode) cols.antipode.push_back(a.take());
  HopfPtr h = make_hopf(k, n, std::move(cols), std::move(name));

  AxiomReport r = check_hopf_axioms(*h);
  if (report) *report = r;
  bool fatal = false;
  for (const AxiomCheck& c : r.checks) fatal = fatal || (!c.passed && c.name != "cocommutativity");
  if (fatal) throw AxiomError("axiom failure:\n" + r.to_string());
  return h;
}

HopfPtr read_hopf_file(const std::string& path, AxiomReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_hopf(s.str(), report);
}

std::string serialize_hopf(const HopfAlgebra& h) {
  const FieldSpec& k = h.field();
  const bool prime = k.is_prime_field();
  const std::size_t n = h.dim();
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": \"1\",\n";
  out << "  \"name\": " << json(h.name()).dump() << ",\n";
  if (prime) {
    out << "  \"field\": {\"kind\": \"Fp\", \"p\": " << k.characteristic() << "},\n";
  } else {
    out << "  \"field\": {\"kind\": \"Q\"},\n";
  }
  out << "  \"dim\": " << n << ",\n";

  auto list = [&](const char* key, const std::vector<Scalar>& values) {
    out << "  \"" << key << "\": [";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << (i ? ", " : "");
      if (prime) {
        out << coefficient(values[i], true);
      } else {
        out << "[" << coefficient(values[i], false) << "]";
      }
    }
    out << "],\n";
  };
  list("unit", h.one().to_dense(k, n));
  list("counit", h.columns().counit);

  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const Term& t : h.product(i, j).terms()) {
        rows.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(t.index) + ", " +
                       coefficient(t.coeff, prime) + "]");
      }
    }
  }
  write_block(out, "mult", rows, false);
  rows.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (const Term& t : h.coproduct(i).terms()) {
      rows.push_back("[" + std::to_string(i) + ", " + std::to_string(t.index / n) + ", " +
                     std::to_string(t.index % n) + ", " + coefficient(t.coeff, prime) + "]");
    }
  }
  write_block(out, "comult", rows, false);
  rows.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (const Term& t : h.antipode(i).terms()) {
      rows.push_back("[" + std::to_string(i) + ", " + std::to_string(t.index) + ", " + coefficient(t.coeff, prime) +
                     "]");
    }
  }
  write_block(out, "antipode", rows, true);
  out << "}\n";
  return out.str();
}

void write_hopf_file(const HopfAlgebra& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInputError("cannot write " + path);
  out << serialize_hopf(h);
}

}  // namespace hopfcat
