#pragma once

// JSON files for algebras and homomorphisms, and the JSON reports emitted
// by the command-line tool.
//
// Algebra file: {"field": "Q" | "Fp:<p>", "dim": n, "basis": [labels],
//                "unit": [coords], "mul": [[coords of e_i e_j for j] for i]}
// Hom file:     {"source": path | algebra, "target": path | algebra,
//                "matrix": [coords in the target of f(e_i), one row per
//                           source basis element]}
// Coordinates are scalar strings ("3", "-1/2", "4 mod 7") or integers.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncspec/correspondence.hpp"
#include "ncspec/harness.hpp"

namespace ncspec {

using Json = nlohmann::ordered_json;

/// Indented JSON in which arrays and objects of scalars stay on one line, so
/// coordinate rows and multiplication tables read as tables.
std::string dump_document(const Json& doc);

/// Parses JSON text; syntax errors name the line and column.
Json parse_json_text(const std::string& text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);

/// The "field" member of an algebra document (or of the source algebra of a
/// hom document, resolved relative to `base`).
FieldSpec algebra_field(const Json& doc);
FieldSpec hom_field(const Json& doc, const std::filesystem::path& base);

template <ExactScalar Scalar>
Scalar scalar_from_json(const FieldSpec& field, const Json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) return scalar_from_int<Scalar>(field, value.get<long long>());
    if (value.is_string()) return parse_scalar<Scalar>(field, value.get<std::string>());
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  throw ValidationError(where + ": expected a scalar string or integer");
}

template <ExactScalar Scalar>
Json scalar_to_json(const FieldSpec& field, const Scalar& x) {
  return format_scalar(field, x);
}

template <ExactScalar Scalar>
Vector<Scalar> vector_from_json(const FieldSpec& field, const Json& value, Index n, const std::string& where) {
  if (!value.is_array()) throw ValidationError(where + ": expected an array of " + std::to_string(n) + " coordinates");
  if (static_cast<Index>(value.size()) != n)
    throw ValidationError(where + ": expected " + std::to_string(n) + " coordinates, found " + std::to_string(value.size()));
  Vector<Scalar> v(n);
  for (Index k = 0; k < n; ++k) v(k) = scalar_from_json<Scalar>(field, value[static_cast<std::size_t>(k)], where + "[" + std::to_string(k) + "]");
  return v;
}

template <ExactScalar Scalar>
Json vector_to_json(const FieldSpec& field, const Vector<Scalar>& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(scalar_to_json(field, v(k)));
  return out;
}

/// Rows of the canonical basis of a subspace.
template <ExactScalar Scalar>
Json subspace_to_json(const FieldSpec& field, const Subspace<Scalar>& s) {
  Json out = Json::array();
  for (Index i = 0; i < s.dim(); ++i) out.push_back(vector_to_json(field, s.basis_vector(i)));
  return out;
}

/// Builds an algebra from a document. `field_override` reinterprets the
/// coordinates over another field.
template <ExactScalar Scalar>
AlgebraPtr<Scalar> algebra_from_json(const Json& doc, std::optional<FieldSpec> field_override = std::nullopt) {
  if (!doc.is_object()) throw ValidationError("algebra: expected a JSON object");
  for (const char* key : {"field", "dim", "basis", "unit", "mul"})
    if (!doc.contains(key)) throw ValidationError(std::string("algebra: missing \"") + key + "\"");
  const FieldSpec field = field_override ? *field_override : algebra_field(doc);
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    throw ValidationError("algebra: \"dim\" must be a positive integer");
  const auto n = static_cast<Index>(doc["dim"].get<long long>());
  const Json& basis = doc["basis"];
  if (!basis.is_array() || static_cast<Index>(basis.size()) != n)
    throw ValidationError("algebra: \"basis\" must list " + std::to_string(n) + " labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) throw ValidationError("algebra: basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const Vector<Scalar> unit = vector_from_json<Scalar>(field, doc["unit"], n, "unit");
  const Json& mul = doc["mul"];
  if (!mul.is_array() || static_cast<Index>(mul.size()) != n)
    throw ValidationError("algebra: \"mul\" must have " + std::to_string(n) + " rows");
  std::vector<std::vector<Vector<Scalar>>> table(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Json& row = mul[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ValidationError("algebra: mul[" + std::to_string(i) + "] must have " + std::to_string(n) + " entries");
    for (Index j = 0; j < n; ++j)
      table[i].push_back(vector_from_json<Scalar>(field, row[static_cast<std::size_t>(j)], n,
                                                  "mul[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
  }
  return std::make_shared<const Algebra<Scalar>>(field, std::move(labels), table, unit);
}

/// Canonical document: field string, plain labels, scalars in report form.
template <ExactScalar Scalar>
Json algebra_to_json(const Algebra<Scalar>& a) {
  Json doc;
  doc["field"] = to_string(a.field());
  doc["dim"] = a.dim();
  doc["basis"] = a.labels();
  doc["unit"] = vector_to_json(a.field(), a.unit());
  Json mul = Json::array();
  for (Index i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.dim(); ++j) row.push_back(vector_to_json(a.field(), a.basis_product(i, j)));
    mul.push_back(std::move(row));
  }
  doc["mul"] = std::move(mul);
  return doc;
}

namespace detail {

template <ExactScalar Scalar>
AlgebraPtr<Scalar> resolve_algebra(const Json& ref, const std::filesystem::path& base, std::optional<FieldSpec> field,
                                   const std::string& role) {
  if (ref.is_string()) {
    const std::filesystem::path path = base / ref.get<std::string>();
    try {
      return algebra_from_json<Scalar>(read_json_file(path), field);
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
  }
  if (ref.is_object()) return algebra_from_json<Scalar>(ref, field);
  throw ValidationError("hom: \"" + role + "\" must be a path or an algebra object");
}

}  // namespace detail

/// Paths inside the document are relative to `base`.
template <ExactScalar Scalar>
AlgebraHom<Scalar> hom_from_json(const Json& doc, const std::filesystem::path& base,
                                 std::optional<FieldSpec> field_override = std::nullopt) {
  if (!doc.is_object()) throw ValidationError("hom: expected a JSON object");
  for (const char* key : {"source", "target", "matrix"})
    if (!doc.contains(key)) throw ValidationError(std::string("hom: missing \"") + key + "\"");
  auto source = detail::resolve_algebra<Scalar>(doc["source"], base, field_override, "source");
  auto target = detail::resolve_algebra<Scalar>(doc["target"], base, field_override, "target");
  const Json& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<Index>(rows.size()) != source->dim())
    throw ValidationError("hom: \"matrix\" must have one row per source basis element (" +
                          std::to_string(source->dim()) + ")");
  Matrix<Scalar> m(target->dim(), source->dim());
  for (Index i = 0; i < source->dim(); ++i)
    m.col(i) = vector_from_json<Scalar>(source->field(), rows[static_cast<std::size_t>(i)], target->dim(),
                                        "matrix[" + std::to_string(i) + "]");
  return AlgebraHom<Scalar>(source, target, std::move(m));
}

template <ExactScalar Scalar>
Json hom_to_json(const AlgebraHom<Scalar>& f, const Json& source_ref, const Json& target_ref) {
  Json doc;
  doc["source"] = source_ref;
  doc["target"] = target_ref;
  Json rows = Json::array();
  for (Index i = 0; i < f.matrix().cols(); ++i) rows.push_back(vector_to_json<Scalar>(f.source()->field(), f.matrix().col(i)));
  doc["matrix"] = std::move(rows);
  return doc;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

Json point_set_to_json(PointSet s);

template <ExactScalar Scalar>
Json spec_to_json(const SpecSet<Scalar>& s, const std::optional<std::vector<GoldieRank>>& ranks, std::size_t closed_count) {
  const auto& field = s.algebra()->field();
  Json out;
  out["field"] = to_string(field);
  out["dim"] = s.algebra()->dim();
  out["radical"] = subspace_to_json(field, s.radical().carrier());
  Json primes = Json::array();
  for (int k = 0; k < s.size(); ++k) {
    Json p;
    p["name"] = "P" + std::to_string(k + 1);
    p["ideal"] = subspace_to_json(field, s.prime(k).ideal.carrier());
    p["text"] = s.prime(k).ideal.describe();
    p["quotient_dim"] = s.prime(k).quotient_dim;
    if (ranks) {
      p["goldie_rank"] = (*ranks)[static_cast<std::size_t>(k)].rank;
      p["min_left_ideal_dim"] = (*ranks)[static_cast<std::size_t>(k)].s;
    }
    primes.push_back(std::move(p));
  }
  out["primes"] = std::move(primes);
  out["closed_set_count"] = closed_count;
  return out;
}

inline Json optional_int(const std::optional<int>& t) { return t ? Json(*t) : Json(nullptr); }

template <ExactScalar Scalar>
Json analysis_to_json(const HomContext<Scalar>& ctx, const HomAnalysis<Scalar>& a) {
  const auto& field = ctx.r_algebra()->field();
  Json out;
  out["report"] = "analysis";
  out["spec_r"] = spec_to_json(ctx.spec_r(), std::nullopt, ctx.closed_r().closed_count());
  out["spec_s"] = spec_to_json(ctx.spec_s(), std::nullopt, ctx.closed_s().closed_count());
  Json r = Json::array();
  for (int p = 0; p < ctx.spec_s().size(); ++p) r.push_back(point_set_to_json(ctx.r().at(p)));
  out["r"] = std::move(r);
  Json flags;
  flags["single_valued"] = a.single_valued;
  flags["continuous"] = a.continuous;
  flags["condition_2prime"] = a.condition_2prime;
  flags["adjoint_3_2"] = a.adjoint;
  flags["criterion_3_13"] = a.criterion_3_13;
  flags["nearly_centralizing_primes"] = a.nearly_centralizing_primes;
  flags["nearly_centralizing_ideals"] = a.nearly_centralizing_ideals;
  flags["centralizing"] = a.centralizing;
  flags["lemma_3_14"] = a.lemma_3_14;
  out["flags"] = std::move(flags);
  Json prime_t = Json::array();
  for (const auto& t : a.prime_t) prime_t.push_back(optional_int(t));
  out["prime_t"] = std::move(prime_t);
  Json ideal_t = Json::array();
  const auto& us = ctx.closed_r().closed_sets();
  for (std::size_t k = 0; k < us.size(); ++k)
    ideal_t.push_back(Json{{"closed_set", point_set_to_json(us[k])}, {"t", optional_int(a.ideal_t[k])}});
  out["ideal_t"] = std::move(ideal_t);

  Json w = Json::object();
  auto prime_s = [&](int p) {
    return Json{{"index", p}, {"ideal", subspace_to_json(field, ctx.spec_s().prime(p).ideal.carrier())}};
  };
  auto prime_r = [&](int q) {
    return Json{{"index", q}, {"ideal", subspace_to_json(field, ctx.spec_r().prime(q).ideal.carrier())}};
  };
  if (a.single_valued_witness)
    w["single_valued"] = Json{{"P", prime_s(*a.single_valued_witness)}, {"image", point_set_to_json(ctx.r().at(*a.single_valued_witness))}};
  if (a.continuity_witness) w["continuous"] = Json{{"closed_set", point_set_to_json(*a.continuity_witness)}};
  if (a.condition_2prime_witness) {
    const PointSet u = *a.condition_2prime_witness;
    w["condition_2prime"] = Json{{"closed_set", point_set_to_json(u)},
                                 {"ideal", subspace_to_json(field, ctx.ideal_of_r(u).carrier())},
                                 {"strong_preimage", point_set_to_json(ctx.r().strong_preimage(u))},
                                 {"v_s_extension", point_set_to_json(v_of(ctx.spec_s(), extension_annihilator(ctx.hom(), ctx.ideal_of_r(u))))}};
  }
  if (a.adjoint_witness)
    w["adjoint_3_2"] = Json{{"v", point_set_to_json(a.adjoint_witness->u)}, {"u", point_set_to_json(a.adjoint_witness->v)}};
  if (a.criterion_3_13_witness)
    w["criterion_3_13"] = Json{{"P", prime_s(a.criterion_3_13_witness->p)}, {"Q", prime_r(a.criterion_3_13_witness->q)}};
  if (a.nearly_centralizing_prime_witness) w["nearly_centralizing_primes"] = Json{{"Q", prime_r(*a.nearly_centralizing_prime_witness)}};
  if (a.nearly_centralizing_ideal_witness) {
    const PointSet u = *a.nearly_centralizing_ideal_witness;
    w["nearly_centralizing_ideals"] = Json{{"closed_set", point_set_to_json(u)}, {"ideal", subspace_to_json(field, ctx.ideal_of_r(u).carrier())}};
  }
  if (a.centralizing_witness)
    w["centralizing"] = Json{{"basis_element", ctx.s_algebra()->labels()[static_cast<std::size_t>(*a.centralizing_witness)]}};
  if (a.lemma_3_14_witness) w["lemma_3_14"] = Json{{"P", prime_s(*a.lemma_3_14_witness)}};
  out["witnesses"] = std::move(w);
  out["consistent"] = a.consistent();
  out["inconsistencies"] = a.inconsistencies;
  return out;
}

/// Structural check of a report against the documented schema (see
/// README); returns one message per violation.
std::vector<std::string> report_schema_violations(const Json& report);

}  // namespace ncspec
