#include "wexlat/category.hpp"

#include <json.hpp>
#include <set>
#include <stdexcept>

namespace wexlat {

using nlohmann::json;
using nlohmann::ordered_json;

Category type_a(int n, const std::string& orientation, Scalar p) {
  Category cat;
  cat.field = PrimeField(p);
  QuiverPtr q;
  cat.indecs = type_a_category(n, orientation, cat.field, &q);
  cat.quiver = q;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      cat.names.push_back("[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return cat;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const json& need(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("category file: missing \"") + key + "\" in " + ctx);
  return j.at(key);
}

}  // namespace

Category parse_category(const std::string& json_text, std::optional<Scalar> override_field) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) bad("category file: not valid JSON");

  const json& jfield = need(j, "field", "top level");
  if (!jfield.is_number_unsigned()) bad("category file: \"field\" must be a positive integer");
  Scalar p = override_field.value_or(jfield.get<Scalar>());
  if (!is_prime(p)) bad("category file: field " + std::to_string(p) + " is not prime");

  Category cat;
  cat.field = PrimeField(p);

  const json& jq = need(j, "quiver", "top level");
  const json& jverts = need(jq, "vertices", "quiver");
  if (!jverts.is_number_unsigned() || jverts.get<int>() < 1)
    bad("category file: quiver.vertices must be a positive integer");
  int nverts = jverts.get<int>();
  std::vector<Arrow> arrows;
  for (const json& ja : need(jq, "arrows", "quiver")) {
    Arrow a{need(ja, "id", "arrow").get<int>(), need(ja, "source", "arrow").get<int>(),
            need(ja, "target", "arrow").get<int>()};
    arrows.push_back(a);
  }
  try {
    cat.quiver = std::make_shared<const Quiver>(nverts, std::move(arrows));
  } catch (const std::invalid_argument& e) {
    bad(std::string("category file: ") + e.what());
  }

  const json& jinds = need(j, "indecomposables", "top level");
  if (!jinds.is_array() || jinds.empty())
    bad("category file: \"indecomposables\" must be a non-empty array");
  std::set<std::string> seen_names;
  for (const json& ji : jinds) {
    std::string name = need(ji, "name", "indecomposable").get<std::string>();
    if (!seen_names.insert(name).second)
      bad("category file: duplicate indecomposable name \"" + name + "\"");
    const json& jdims = need(ji, "dims", "indecomposable \"" + name + "\"");
    if (!jdims.is_array() || jdims.size() != static_cast<std::size_t>(nverts))
      bad("category file: \"" + name + "\": dims must list one entry per vertex");
    Representation rep;
    rep.quiver = cat.quiver;
    for (const json& d : jdims) {
      if (!d.is_number_unsigned()) bad("category file: \"" + name + "\": dims must be >= 0");
      rep.dims.push_back(d.get<std::size_t>());
    }
    const json& jmats = need(ji, "matrices", "indecomposable");
    if (!jmats.is_array() || jmats.size() != cat.quiver->arrows().size())
      bad("category file: \"" + name + "\": matrices must list one matrix per arrow");
    for (const Arrow& a : cat.quiver->arrows()) {
      std::size_t rows = rep.dims[static_cast<std::size_t>(a.target - 1)];
      std::size_t cols = rep.dims[static_cast<std::size_t>(a.source - 1)];
      const json& jm = jmats[static_cast<std::size_t>(a.id)];
      if (!jm.is_array() || jm.size() != rows)
        bad("category file: \"" + name + "\": matrix for arrow " + std::to_string(a.id) +
            " must have " + std::to_string(rows) + " rows");
      Matrix m(cat.field, rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        const json& jrow = jm[r];
        if (!jrow.is_array() || jrow.size() != cols)
          bad("category file: \"" + name + "\": matrix for arrow " + std::to_string(a.id) +
              " must have " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c) {
          if (!jrow[c].is_number_integer())
            bad("category file: \"" + name + "\": matrix entries must be integers");
          m.at(r, c) = cat.field.reduce(jrow[c].get<std::int64_t>());
        }
      }
      rep.mats.push_back(std::move(m));
    }
    rep.check_shapes();
    cat.indecs.push_back(std::move(rep));
    cat.names.push_back(std::move(name));
  }

  if (j.contains("metadata")) cat.metadata_json = j.at("metadata").dump();
  return cat;
}

std::string category_to_json(const Category& cat) {
  ordered_json j;
  j["field"] = cat.field.modulus();
  ordered_json jq;
  jq["vertices"] = cat.quiver->num_vertices();
  jq["arrows"] = ordered_json::array();
  for (const Arrow& a : cat.quiver->arrows())
    jq["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  j["quiver"] = std::move(jq);
  j["indecomposables"] = ordered_json::array();
  for (std::size_t i = 0; i < cat.indecs.size(); ++i) {
    const Representation& rep = cat.indecs[i];
    ordered_json ji;
    ji["name"] = cat.names[i];
    ji["dims"] = rep.dims;
    ji["matrices"] = ordered_json::array();
    for (const Matrix& m : rep.mats) {
      ordered_json jm = ordered_json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) jm.push_back(m.row(r));
      ji["matrices"].push_back(std::move(jm));
    }
    j["indecomposables"].push_back(std::move(ji));
  }
  j["metadata"] = json::parse(cat.metadata_json);
  return j.dump(2) + "\n";
}

}  // namespace wexlat
