#pragma once

// JSON formats shared by the command-line tool. Rationals are strings
// "p/q" (or "p"), dyadics "m*2^-e".
//
//   tree       {"excluded": ["00", "1011"]}
//   function   {"breakpoints": [["0","-1"], ["2/5","0"], ["1","1"]]}
//   game       {"A": [["1","-1"], ["-1","1/2"]], "B": [["-1","1"], ["1","-1"]]}
//   svc query  {"epsilon": "1/2", "word": "01", "depth": 10}
//   interval   {"lo": "p/q", "hi": "p/q"}
//   majority   {"k": 20, "max_depth": 3,
//               "outputs": [{"word": "000", "lo": "p/q", "hi": "p/q"}]}

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lvc/cotree.hpp"
#include "lvc/majority.hpp"
#include "lvc/nash.hpp"
#include "lvc/numeric.hpp"
#include "lvc/pwl.hpp"

namespace lvc {

using Json = nlohmann::json;

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const Json& json_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

/// Accepts a string "p/q" or an integer.
inline Rational json_rational(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational string such as \"1/3\", got " + j.dump());
}

inline std::size_t json_natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw FormatError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json interval_json(const Interval& iv) { return {{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}}; }

inline Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

inline CoTree tree_from_json(const Json& j) {
  const Json& ex = json_field(j, "excluded");
  if (!ex.is_array()) throw FormatError("'excluded' must be an array of binary words");
  std::vector<std::string> words;
  for (const auto& w : ex) {
    if (!w.is_string()) throw FormatError("'excluded' must be an array of binary words");
    words.push_back(w.get<std::string>());
  }
  try {
    return CoTree::from_excluded(std::move(words));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline Json tree_json(const CoTree& t) { return {{"excluded", t.excluded()}}; }

inline PwlFunction pwl_from_json(const Json& j) {
  const Json& bp = json_field(j, "breakpoints");
  if (!bp.is_array()) throw FormatError("'breakpoints' must be an array of [t, value] pairs");
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& p : bp) {
    if (!p.is_array() || p.size() != 2) throw FormatError("each breakpoint must be a [t, value] pair");
    pts.emplace_back(json_rational(p[0]), json_rational(p[1]));
  }
  try {
    return PwlFunction::make(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline Matrix matrix_from_json(const Json& j, const char* name) {
  if (!j.is_array()) throw FormatError(std::string("'") + name + "' must be an array of rows");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError(std::string("'") + name + "' must be an array of rows");
    Vector r;
    for (const auto& e : row) r.push_back(json_rational(e));
    m.push_back(std::move(r));
  }
  return m;
}

inline BimatrixGame game_from_json(const Json& j) {
  try {
    return BimatrixGame::make(matrix_from_json(json_field(j, "A"), "A"), matrix_from_json(json_field(j, "B"), "B"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline Json game_json(const BimatrixGame& g) {
  auto mat = [](const Matrix& m) {
    Json out = Json::array();
    for (const auto& r : m) out.push_back(vector_json(r));
    return out;
  };
  return {{"A", mat(g.A)}, {"B", mat(g.B)}};
}

struct SvcQuery {
  Dyadic epsilon;
  std::string word;
  std::size_t depth = 0;
};

/// Epsilon must be dyadic; it may be given as "p/q" with q a power of two or as "m*2^-e".
inline Dyadic dyadic_from_string(const std::string& s) {
  try {
    if (s.find("*2^-") != std::string::npos) return Dyadic::parse(s);
    const Rational q = parse_rational(s);
    const BigInt d = den(q);
    if ((d & (d - 1)) != 0) throw FormatError("'" + s + "' is not a dyadic rational");
    const auto e = static_cast<std::int64_t>(boost::multiprecision::msb(d));
    return Dyadic(num(q), e);
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline SvcQuery svc_query_from_json(const Json& j) {
  SvcQuery q;
  const Json& e = json_field(j, "epsilon");
  if (!e.is_string()) throw FormatError("'epsilon' must be a rational string");
  q.epsilon = dyadic_from_string(e.get<std::string>());
  if (j.contains("word")) {
    if (!j.at("word").is_string()) throw FormatError("'word' must be a binary string");
    q.word = j.at("word").get<std::string>();
  }
  if (j.contains("depth")) q.depth = json_natural(j.at("depth"), "'depth'");
  return q;
}

inline Interval interval_from_json(const Json& j) {
  Interval iv{json_rational(json_field(j, "lo")), json_rational(json_field(j, "hi"))};
  if (iv.hi < iv.lo) throw FormatError("interval with hi < lo");
  return iv;
}

struct MajorityInput {
  std::size_t k = 0;
  std::size_t max_depth = 0;
  std::map<std::string, Interval> outputs;

  MajorityOracle oracle() const {
    auto table = outputs;
    return [table](const std::string& w) -> std::optional<Interval> {
      auto it = table.find(w);
      if (it == table.end()) return std::nullopt;
      return it->second;
    };
  }
};

inline MajorityInput majority_from_json(const Json& j) {
  MajorityInput in;
  in.k = json_natural(json_field(j, "k"), "'k'");
  in.max_depth = json_natural(json_field(j, "max_depth"), "'max_depth'");
  const Json& outs = json_field(j, "outputs");
  if (!outs.is_array()) throw FormatError("'outputs' must be an array");
  for (const auto& o : outs) {
    const Json& w = json_field(o, "word");
    if (!w.is_string()) throw FormatError("'word' must be a binary string");
    try {
      require_binary_word(w.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    in.outputs[w.get<std::string>()] = interval_from_json(o);
  }
  return in;
}

}  // namespace lvc
