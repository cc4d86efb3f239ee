#include "ualg/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ualg/library.hpp"

namespace ualg {

  using nlohmann::json;

  namespace {
    [[noreturn]] void fail(std::string const& source, std::string const& where,
                           std::string const& msg) {
      throw Error(source + ": " + where + ": " + msg);
    }

    json parse_json(std::string_view text, std::string const& source) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        // Convert the byte offset into line:column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
          if (text[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
        fail(source, "line " + std::to_string(line) + ", column "
                         + std::to_string(col),
             "malformed JSON");
      }
    }

    json const& member(json const& obj, char const* key,
                       std::string const& source, std::string const& where) {
      auto it = obj.find(key);
      if (it == obj.end()) {
        fail(source, where, std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    std::size_t as_count(json const& v, std::string const& source,
                         std::string const& where) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(source, where, "expected a non-negative integer");
      }
      return v.get<std::size_t>();
    }
  }  // namespace

  FiniteAlgebra parse_algebra_json(std::string_view   text,
                                   std::string const& source) {
    auto const doc = parse_json(text, source);
    if (!doc.is_object()) {
      fail(source, "top level", "expected an object");
    }
    auto const& name_v = member(doc, "name", source, "top level");
    if (!name_v.is_string()) {
      fail(source, "name", "expected a string");
    }
    auto const n = as_count(member(doc, "size", source, "top level"), source,
                            "size");
    if (n == 0) {
      fail(source, "size", "must be positive");
    }
    std::vector<std::string> labels;
    if (auto it = doc.find("labels"); it != doc.end()) {
      if (!it->is_array() || it->size() != n) {
        fail(source, "labels",
             "expected an array of " + std::to_string(n) + " strings");
      }
      std::set<std::string> seen;
      for (std::size_t i = 0; i < n; ++i) {
        auto const& l = (*it)[i];
        if (!l.is_string()) {
          fail(source, "labels[" + std::to_string(i) + "]",
               "expected a string");
        }
        if (!seen.insert(l.get<std::string>()).second) {
          fail(source, "labels[" + std::to_string(i) + "]",
               "duplicate label \"" + l.get<std::string>() + "\"");
        }
        labels.push_back(l.get<std::string>());
      }
    }
    auto const& ops_v = member(doc, "ops", source, "top level");
    if (!ops_v.is_array()) {
      fail(source, "ops", "expected an array");
    }
    std::vector<Operation>         ops;
    std::vector<std::vector<Elem>> tables;
    for (std::size_t k = 0; k < ops_v.size(); ++k) {
      auto const  where = "ops[" + std::to_string(k) + "]";
      auto const& op    = ops_v[k];
      if (!op.is_object()) {
        fail(source, where, "expected an object");
      }
      auto const& on = member(op, "name", source, where);
      if (!on.is_string()) {
        fail(source, where + ".name", "expected a string");
      }
      auto const  opname = on.get<std::string>();
      auto const  arity  = as_count(member(op, "arity", source, where), source,
                                    where + ".arity");
      auto const& tv     = member(op, "table", source, where);
      auto const  want   = checked_pow(n, arity);
      if (!tv.is_array()) {
        fail(source, where + ".table", "expected an array");
      }
      if (tv.size() != want) {
        fail(source, where + ".table",
             "operation '" + opname + "' of arity " + std::to_string(arity)
                 + " needs " + std::to_string(want) + " entries for size "
                 + std::to_string(n) + ", got " + std::to_string(tv.size()));
      }
      std::vector<Elem> table(want);
      for (std::size_t i = 0; i < want; ++i) {
        auto const& e = tv[i];
        if (!e.is_number_integer() || e.get<long long>() < 0
            || e.get<unsigned long long>() >= n) {
          fail(source, where + ".table[" + std::to_string(i) + "]",
               "entry " + e.dump() + " of '" + opname + "' is not in [0, "
                   + std::to_string(n) + ")");
        }
        table[i] = e.get<Elem>();
      }
      ops.push_back({opname, arity});
      tables.push_back(std::move(table));
    }
    try {
      return FiniteAlgebra(name_v.get<std::string>(), Signature(std::move(ops)),
                           n, std::move(tables), std::move(labels));
    } catch (Error const& e) {
      fail(source, "ops", e.what());
    }
  }

  std::string render_algebra_json(FiniteAlgebra const& alg) {
    json doc;
    doc["name"] = alg.name();
    doc["size"] = alg.size();
    if (alg.has_labels()) {
      doc["labels"] = alg.labels();
    }
    doc["ops"] = json::array();
    auto const& sig = alg.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto t = alg.table(op);
      doc["ops"].push_back({{"name", sig[op].name},
                            {"arity", sig[op].arity},
                            {"table", std::vector<Elem>(t.begin(), t.end())}});
    }
    return doc.dump() + "\n";
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(path + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  FiniteAlgebra load_algebra(std::string const& ref) {
    if (!ref.empty() && ref[0] == '@') {
      if (auto a = lib::builtin(ref.substr(1))) {
        return *a;
      }
      std::string known;
      for (auto const& n : lib::builtin_names()) {
        known += " @" + n;
      }
      throw Error("unknown built-in algebra '" + ref + "'; known:" + known);
    }
    return parse_algebra_json(read_text_file(ref), ref);
  }

  Homomorphism parse_hom_json(std::string_view text, std::string const& source,
                              std::string const& base_dir) {
    auto const doc = parse_json(text, source);
    if (!doc.is_object()) {
      fail(source, "top level", "expected an object");
    }
    auto resolve = [&](char const* key) {
      auto const& v = member(doc, key, source, "top level");
      if (!v.is_string()) {
        fail(source, key, "expected an algebra reference string");
      }
      auto ref = v.get<std::string>();
      if (ref.empty() || ref[0] == '@'
          || std::filesystem::path(ref).is_absolute()) {
        return load_algebra(ref);
      }
      return load_algebra((std::filesystem::path(base_dir) / ref).string());
    };
    auto dom = resolve("from");
    auto cod = resolve("to");
    auto const& mv = member(doc, "map", source, "top level");
    if (!mv.is_array() || mv.size() != dom.size()) {
      fail(source, "map",
           "expected an array of " + std::to_string(dom.size()) + " entries");
    }
    Mapping m(dom.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto const& e = mv[i];
      if (!e.is_number_integer() || e.get<long long>() < 0
          || e.get<unsigned long long>() >= cod.size()) {
        fail(source, "map[" + std::to_string(i) + "]",
             "entry " + e.dump() + " is not in [0, "
                 + std::to_string(cod.size()) + ")");
      }
      m[i] = e.get<Elem>();
    }
    Homomorphism h{dom, cod, std::move(m)};
    if (auto v = check_homomorphism(h)) {
      fail(source, "map", "not a homomorphism: " + describe(h, *v));
    }
    return h;
  }

  Homomorphism load_hom(std::string const& ref) {
    if (ref == "@f") {
      return lib::example_f();
    }
    if (ref == "@g") {
      return lib::example_g();
    }
    auto base = std::filesystem::path(ref).parent_path().string();
    return parse_hom_json(read_text_file(ref), ref, base);
  }

}  // namespace ualg
