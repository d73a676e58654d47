#include "skein/serialize.hpp"

#include "skein/error.hpp"

namespace skein {
namespace {

nlohmann::json integer_json(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return from_int64(j.get<std::int64_t>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::Parse, "bad integer string in JSON");
    return z;
  }
  throw Error(ErrorKind::Parse, "expected an integer in JSON");
}

}  // namespace

nlohmann::json to_json(const LaurentQT& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& term : p.terms()) {
    out.push_back({{"qn", integer_json(term.exp.q_exp.get_num())},
                   {"qd", integer_json(term.exp.q_exp.get_den())},
                   {"t", term.exp.t_exp},
                   {"cn", integer_json(term.coeff.get_num())},
                   {"cd", integer_json(term.coeff.get_den())}});
  }
  return out;
}

LaurentQT laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "polynomial JSON must be an array");
  LaurentQT p;
  try {
    for (const auto& rec : j) {
      const Integer qd = integer_from_json(rec.at("qd"));
      const Integer cd = integer_from_json(rec.at("cd"));
      if (qd == 0 || cd == 0) throw Error(ErrorKind::Parse, "zero denominator in JSON term");
      Rational qe(integer_from_json(rec.at("qn")), qd);
      Rational c(integer_from_json(rec.at("cn")), cd);
      qe.canonicalize();
      c.canonicalize();
      p += LaurentQT::monomial(c, qe, rec.at("t").get<std::int64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

nlohmann::json to_json(const RationalQT& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RationalQT rational_function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(ErrorKind::Parse, "rational function JSON needs num and den");
  }
  return RationalQT(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

}  // namespace skein
