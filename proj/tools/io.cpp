#include "io.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "brsc/errors.hpp"

namespace brsc {
namespace {

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open file");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw UsageError(path + ": malformed JSON");
  return j;
}

std::vector<std::string> string_list(const Json& j, const std::string& where,
                                     const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw UsageError(where + ": missing \"" + key + "\" array");
  std::vector<std::string> out;
  for (const Json& item : j[key]) {
    if (!item.is_string())
      throw UsageError(where + ": \"" + key + "\" entry " +
                       std::to_string(out.size()) + " is not a string");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Universe universe_from(const Json& j, const std::string& where) {
  const std::vector<std::string> labels = string_list(j, where, "vertices");
  if (labels.empty()) throw UsageError(where + ": empty vertex list");
  if (labels.size() > static_cast<std::size_t>(Mask::kMaxVertices))
    throw UsageError(where + ": more than " +
                     std::to_string(Mask::kMaxVertices) + " vertices");
  try {
    return Universe(labels);
  } catch (const UsageError& e) {
    throw UsageError(where + ": " + e.what());
  }
}

}  // namespace

Json complex_to_json(const SimplicialComplex& s) {
  Json j;
  j["format"] = 1;
  j["vertices"] = s.universe().labels();
  Json facets = Json::array();
  for (Mask f : s.facets()) facets.push_back(s.universe().labels_of(f));
  j["facets"] = std::move(facets);
  return j;
}

SimplicialComplex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + ": expected a JSON object");
  Universe u = universe_from(j, where);
  if (!j.contains("facets") || !j["facets"].is_array())
    throw UsageError(where + ": missing \"facets\" array");
  if (j["facets"].empty()) throw UsageError(where + ": empty facet list");
  std::vector<Mask> faces;
  for (const Json& facet : j["facets"]) {
    const std::string entry = "facet " + std::to_string(faces.size());
    if (!facet.is_array())
      throw UsageError(where + ": " + entry + " is not an array");
    if (facet.empty()) throw UsageError(where + ": " + entry + " is empty");
    Mask m;
    for (const Json& label : facet) {
      if (!label.is_string())
        throw UsageError(where + ": " + entry + " holds a non-string vertex");
      const auto v = u.find(label.get<std::string>());
      if (!v)
        throw UsageError(where + ": " + entry +
                         " references unknown vertex \"" +
                         label.get<std::string>() + "\"");
      m = m.with(*v);
    }
    faces.push_back(m);
  }
  return SimplicialComplex(std::move(u), std::move(faces));
}

Json matrix_to_json(const BooleanMatrix& m) {
  Json j;
  j["format"] = 1;
  j["rows"] = m.row_labels();
  j["vertices"] = m.columns().labels();
  Json entries = Json::array();
  for (int r = 0; r < m.n_rows(); ++r) {
    std::string line(static_cast<std::size_t>(m.columns().size()), '0');
    for (int c = 0; c < m.columns().size(); ++c)
      if (m.entry(r, c)) line[static_cast<std::size_t>(c)] = '1';
    entries.push_back(line);
  }
  j["entries"] = std::move(entries);
  return j;
}

BooleanMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + ": expected a JSON object");
  const std::vector<std::string> row_labels = string_list(j, where, "rows");
  if (row_labels.empty()) throw UsageError(where + ": empty row list");
  Universe u = universe_from(j, where);
  const std::vector<std::string> entries = string_list(j, where, "entries");
  if (entries.size() != row_labels.size())
    throw UsageError(where + ": " + std::to_string(entries.size()) +
                     " entry rows for " + std::to_string(row_labels.size()) +
                     " row labels");
  std::vector<Mask> rows;
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const std::string& line = entries[r];
    const std::string entry = "entries[" + std::to_string(r) + "]";
    if (line.size() != static_cast<std::size_t>(u.size()))
      throw UsageError(where + ": " + entry + " has length " +
                       std::to_string(line.size()) + ", expected " +
                       std::to_string(u.size()));
    Mask m;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] == '1')
        m = m.with(static_cast<int>(c));
      else if (line[c] != '0')
        throw UsageError(where + ": " + entry + " position " +
                         std::to_string(c) + " is not '0' or '1'");
    }
    rows.push_back(m);
  }
  return BooleanMatrix(std::move(u), row_labels, std::move(rows));
}

SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(parse_file(path), path);
}

BooleanMatrix load_matrix(const std::string& path) {
  return matrix_from_json(parse_file(path), path);
}

void save(const Json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError(path + ": cannot open file for writing");
  out << report.dump(2) << "\n";
}

}  // namespace brsc
