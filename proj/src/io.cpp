#include "ncspec/io.hpp"

#include <fstream>
#include <sstream>

namespace ncspec {

namespace {

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string message = e.what();
    // Drop the library's "[json.exception.parse_error.101] parse error at ..." prefix.
    if (auto colon = message.find(": "); colon != std::string::npos) message = message.substr(colon + 2);
    throw ValidationError(origin + ": " + line_context(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + message);
  }
}

namespace {

bool is_flat(const Json& v) {
  if (!v.is_structured()) return true;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

void dump_into(const Json& v, int indent, std::string& out) {
  if (is_flat(v)) {
    out += v.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool object = v.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    dump_into(*it, indent + 2, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (object ? "}" : "]");
}

}  // namespace

std::string dump_document(const Json& doc) {
  std::string out;
  dump_into(doc, 0, out);
  return out + "\n";
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

FieldSpec algebra_field(const Json& doc) {
  if (!doc.is_object() || !doc.contains("field")) throw ValidationError("algebra: missing \"field\"");
  if (!doc["field"].is_string()) throw ValidationError("algebra: \"field\" must be a string such as \"Q\" or \"Fp:5\"");
  return parse_field(doc["field"].get<std::string>());
}

FieldSpec hom_field(const Json& doc, const std::filesystem::path& base) {
  if (!doc.is_object() || !doc.contains("source")) throw ValidationError("hom: missing \"source\"");
  const Json& source = doc["source"];
  if (source.is_string()) {
    const auto path = base / source.get<std::string>();
    try {
      return algebra_field(read_json_file(path));
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
  }
  return algebra_field(source);
}

Json point_set_to_json(PointSet s) {
  Json out = Json::array();
  for (int k = 0; k < 32; ++k)
    if (contains_point(s, k)) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// Report schema
// ---------------------------------------------------------------------------

namespace {

class SchemaCheck {
 public:
  explicit SchemaCheck(std::vector<std::string>& out) : out_(out) {}

  bool require(const Json& obj, const std::string& path, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) {
      out_.push_back(path + ": missing \"" + key + "\"");
      return false;
    }
    return true;
  }

  template <class Pred>
  void member(const Json& obj, const std::string& path, const std::string& key, Pred pred, const char* expected) {
    if (!require(obj, path, key)) return;
    if (!pred(obj[key])) out_.push_back(path + "." + key + ": expected " + expected);
  }

  void boolean(const Json& obj, const std::string& path, const std::string& key) {
    member(obj, path, key, [](const Json& v) { return v.is_boolean(); }, "a boolean");
  }
  void integer(const Json& obj, const std::string& path, const std::string& key) {
    member(obj, path, key, [](const Json& v) { return v.is_number_integer(); }, "an integer");
  }
  void string(const Json& obj, const std::string& path, const std::string& key) {
    member(obj, path, key, [](const Json& v) { return v.is_string(); }, "a string");
  }
  void point_set(const Json& obj, const std::string& path, const std::string& key) {
    member(obj, path, key, is_point_set, "an array of point indices");
  }
  void vectors(const Json& obj, const std::string& path, const std::string& key) {
    member(obj, path, key, is_vector_list, "an array of coordinate rows");
  }

  void spec(const Json& s, const std::string& path) {
    if (!s.is_object()) {
      out_.push_back(path + ": expected an object");
      return;
    }
    string(s, path, "field");
    integer(s, path, "dim");
    vectors(s, path, "radical");
    integer(s, path, "closed_set_count");
    if (!require(s, path, "primes")) return;
    if (!s["primes"].is_array()) {
      out_.push_back(path + ".primes: expected an array");
      return;
    }
    for (std::size_t k = 0; k < s["primes"].size(); ++k) {
      const Json& p = s["primes"][k];
      const std::string at = path + ".primes[" + std::to_string(k) + "]";
      string(p, at, "name");
      string(p, at, "text");
      vectors(p, at, "ideal");
      integer(p, at, "quotient_dim");
      if (p.is_object() && p.contains("goldie_rank")) integer(p, at, "goldie_rank");
      if (p.is_object() && p.contains("min_left_ideal_dim")) integer(p, at, "min_left_ideal_dim");
    }
  }

  void flags(const Json& obj, const std::string& path) {
    if (!require(obj, path, "flags")) return;
    const Json& f = obj["flags"];
    for (const char* key : {"single_valued", "continuous", "condition_2prime", "adjoint_3_2", "criterion_3_13",
                            "nearly_centralizing_primes", "nearly_centralizing_ideals", "centralizing", "lemma_3_14"})
      boolean(f, path + ".flags", key);
  }

  void analysis(const Json& r) {
    if (require(r, "$", "spec_r")) spec(r["spec_r"], "$.spec_r");
    if (require(r, "$", "spec_s")) spec(r["spec_s"], "$.spec_s");
    member(r, "$", "r", [](const Json& v) {
      if (!v.is_array()) return false;
      for (const auto& x : v)
        if (!is_point_set(x)) return false;
      return true;
    }, "an array of point-index arrays");
    flags(r, "$");
    member(r, "$", "prime_t", [](const Json& v) {
      if (!v.is_array()) return false;
      for (const auto& x : v)
        if (!x.is_null() && !x.is_number_integer()) return false;
      return true;
    }, "an array of integers or nulls");
    member(r, "$", "ideal_t", [](const Json& v) {
      if (!v.is_array()) return false;
      for (const auto& x : v)
        if (!x.is_object() || !x.contains("closed_set") || !is_point_set(x["closed_set"]) || !x.contains("t") ||
            (!x["t"].is_null() && !x["t"].is_number_integer()))
          return false;
      return true;
    }, "an array of {closed_set, t} objects");
    member(r, "$", "witnesses", [](const Json& v) { return v.is_object(); }, "an object");
    boolean(r, "$", "consistent");
    member(r, "$", "inconsistencies", is_string_list, "an array of strings");
    if (r.contains("flags") && r.contains("witnesses") && r["flags"].is_object() && r["witnesses"].is_object()) {
      for (const auto& [key, value] : r["flags"].items())
        if (value.is_boolean() && !value.get<bool>() && key != "lemma_3_14" && !r["witnesses"].contains(key))
          out_.push_back("$.witnesses: flag \"" + key + "\" is false but has no witness");
    }
  }

  void fuzz(const Json& r) {
    integer(r, "$", "seed");
    string(r, "$", "field");
    string(r, "$", "kind");
    string(r, "$", "description");
    member(r, "$", "dims", [](const Json& v) {
      return v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer();
    }, "[dim R, dim S]");
    if (!r.contains("error")) flags(r, "$");
    boolean(r, "$", "consistency");
    member(r, "$", "failures", is_string_list, "an array of strings");
    integer(r, "$", "checks");
    member(r, "$", "timing", [](const Json& v) { return v.is_number(); }, "a number of milliseconds");
  }

 private:
  static bool is_point_set(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= 32) return false;
    return true;
  }
  static bool is_vector_list(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& row : v) {
      if (!row.is_array()) return false;
      for (const auto& x : row)
        if (!x.is_string()) return false;
    }
    return true;
  }
  static bool is_string_list(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (!x.is_string()) return false;
    return true;
  }

  std::vector<std::string>& out_;
};

}  // namespace

std::vector<std::string> report_schema_violations(const Json& report) {
  std::vector<std::string> out;
  SchemaCheck check(out);
  if (!report.is_object()) return {"$: expected an object"};
  if (!check.require(report, "$", "report") || !report["report"].is_string()) {
    if (out.empty()) out.push_back("$.report: expected a string");
    return out;
  }
  const std::string kind = report["report"].get<std::string>();
  if (kind == "spec") {
    check.spec(report, "$");
  } else if (kind == "analysis") {
    check.analysis(report);
  } else if (kind == "fuzz") {
    check.fuzz(report);
  } else {
    out.push_back("$.report: unknown report kind \"" + kind + "\"");
  }
  return out;
}

}  // namespace ncspec
