#include "rankforge/io.hpp"

#include "rankforge/error.hpp"

#include <fstream>
#include <sstream>

namespace rankforge {

namespace {

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorCode::Parse, std::string("missing key '") + key + "'");
  return doc.at(key);
}

std::string string_member(const Json& doc, const char* key) {
  const Json& v = member(doc, key);
  if (!v.is_string()) throw Error(ErrorCode::Parse, std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

Json poly_strings(const KPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.to_string());
  return out;
}

}  // namespace

NumberField field_from_json(const Json& doc) {
  const IntegerPoly m = parse_integer_poly(string_member(doc, "min_poly"));
  std::optional<std::vector<std::uint64_t>> excluded;
  if (doc.contains("excluded_primes") && !doc.at("excluded_primes").is_null()) {
    const Json& list = doc.at("excluded_primes");
    if (!list.is_array()) throw Error(ErrorCode::Parse, "'excluded_primes' must be an array");
    excluded.emplace();
    for (const auto& v : list) {
      if (!v.is_number_unsigned()) throw Error(ErrorCode::Parse, "'excluded_primes' entries must be positive integers");
      excluded->push_back(v.get<std::uint64_t>());
    }
  }
  bool assert_irreducible = false;
  if (doc.contains("assert_irreducible")) {
    if (!doc.at("assert_irreducible").is_boolean())
      throw Error(ErrorCode::Parse, "'assert_irreducible' must be a boolean");
    assert_irreducible = doc.at("assert_irreducible").get<bool>();
  }
  return NumberField::make(m, std::move(excluded), assert_irreducible);
}

Json field_to_json(const NumberField& field) {
  Json out;
  out["min_poly"] = format_integer_poly(field.min_poly());
  if (field.explicit_excluded()) out["excluded_primes"] = *field.explicit_excluded();
  out["assert_irreducible"] = field.asserted_irreducible();
  return out;
}

FamilySpec family_spec_from_json(const Json& doc) {
  FamilySpec spec;
  spec.field = field_from_json(member(doc, "field"));
  const Json& rho = member(doc, "rho");
  if (!rho.is_array()) throw Error(ErrorCode::Parse, "'rho' must be an array");
  for (const auto& v : rho) {
    if (!v.is_string()) throw Error(ErrorCode::Parse, "'rho' entries must be strings");
    spec.rho.push_back(spec.field.parse_element(v.get<std::string>()));
  }
  spec.alpha = doc.contains("alpha") ? spec.field.parse_element(string_member(doc, "alpha")) : spec.field.one();
  return spec;
}

Json family_spec_to_json(const FamilySpec& spec) {
  Json out;
  out["field"] = field_to_json(spec.field);
  out["rho"] = Json::array();
  for (const auto& r : spec.rho) out["rho"].push_back(r.to_string());
  out["alpha"] = spec.alpha.to_string();
  return out;
}

Json family_to_json(const CurveFamily& fam) {
  Json out;
  out["spec"] = family_spec_to_json(fam.spec);
  Json coeffs;
  coeffs["a"] = fam.a.to_string();
  coeffs["b"] = fam.b.to_string();
  coeffs["c"] = fam.c.to_string();
  coeffs["A"] = fam.A.to_string();
  coeffs["B"] = fam.B.to_string();
  coeffs["C"] = fam.C.to_string();
  coeffs["D"] = fam.D.to_string();
  out["coefficients"] = coeffs;
  out["g"] = poly_strings(fam.g);
  out["h"] = poly_strings(fam.h);
  out["D_T"] = poly_strings(fam.D_T);
  out["roots"] = Json::array();
  for (const auto& r : fam.roots) out["roots"].push_back(r.to_string());
  out["bad_divisor"] = fam.bad_divisor.get_str();
  return out;
}

CurveFamily family_from_json(const Json& doc) {
  const bool wrapped = doc.is_object() && doc.contains("spec");
  CurveFamily fam = construct_family(family_spec_from_json(wrapped ? doc.at("spec") : doc));
  if (!wrapped) return fam;
  const Json expected = family_to_json(fam);
  for (const char* key : {"coefficients", "D_T"}) {
    if (doc.contains(key) && doc.at(key) != expected.at(key))
      throw Error(ErrorCode::Parse, std::string("stored '") + key + "' disagrees with the family rebuilt from its spec");
  }
  return fam;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + path);
}

}  // namespace rankforge
