#pragma once

#include <json.hpp>

#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "symwalk/characters.hpp"
#include "symwalk/exact.hpp"
#include "symwalk/limiting.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/walk_spectrum.hpp"

// Serialization of engine results. Field order is fixed (ordered_json) so a
// given input always produces byte-identical output. Big integers are
// written as decimal strings and exact rationals as "p/q" strings.
namespace symwalk::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) {
  Json out = Json::array();
  for (int part : p.parts()) out.push_back(part);
  return out;
}

inline Json generator_json(const ClassFunction& f) {
  Json out = Json::array();
  for (const auto& [gamma, w] : f.weights()) out.push_back(to_json(gamma));
  return out;
}

inline Json weights_json(const ClassFunction& f) {
  Json out = Json::array();
  for (const auto& [gamma, w] : f.weights()) out.push_back(to_exact_string(w));
  return out;
}

inline Json to_json(const CharacterTable& table) {
  Json classes = Json::array();
  for (const auto& p : table.partitions) classes.push_back(to_json(p));
  Json entries = Json::array();
  for (const auto& row : table.entries) {
    Json r = Json::array();
    for (const auto& value : row) r.push_back(value.str());
    entries.push_back(std::move(r));
  }
  Json out;
  out["n"] = table.n;
  out["classes"] = classes;
  out["reps"] = classes;
  out["entries"] = std::move(entries);
  return out;
}

/// Header row lists the classes; each following row starts with the
/// representation. Partitions are quoted because they contain commas.
inline void write_csv(const CharacterTable& table, std::ostream& out) {
  out << "rep";
  for (const auto& lambda : table.partitions) out << ",\"" << lambda.to_string() << '"';
  out << '\n';
  for (std::size_t v = 0; v < table.order(); ++v) {
    out << '"' << table.partitions[v].to_string() << '"';
    for (const auto& value : table.entries[v]) out << ',' << value.str();
    out << '\n';
  }
}

inline Json to_json(const WalkSpectrum& spec) {
  Json lines = Json::array();
  for (const auto& line : spec.lines()) {
    Json l;
    l["rep"] = to_json(line.rep);
    l["dim"] = line.dim.str();
    l["eigenvalue"] = to_double(line.eigenvalue);
    l["exact"] = to_exact_string(line.eigenvalue);
    lines.push_back(std::move(l));
  }
  Json out;
  out["n"] = spec.n();
  out["generator"] = generator_json(spec.generator());
  out["weights"] = weights_json(spec.generator());
  out["degree"] = to_exact_string(spec.degree());
  out["spectrum"] = std::move(lines);
  return out;
}

inline Json to_json(const ClassDistribution& dist, const ClassFunction& f) {
  Json classes = Json::array();
  for (const auto& c : dist.classes) {
    Json entry;
    entry["partition"] = to_json(c.partition);
    entry["class_size"] = c.class_size.str();
    entry["probability"] = c.probability;
    entry["per_element"] = c.per_element;
    classes.push_back(std::move(entry));
  }
  Json out;
  out["n"] = dist.n;
  out["generator"] = generator_json(f);
  out["weights"] = weights_json(f);
  out["t"] = dist.t;
  out["start"] = to_json(dist.start);
  out["classes"] = std::move(classes);
  return out;
}

/// Rows "t,class,probability" for a sweep of distributions.
inline void write_time_series_csv(const std::vector<ClassDistribution>& series, std::ostream& out) {
  out << "t,class,probability\n";
  char buffer[64];
  for (const auto& dist : series)
    for (const auto& c : dist.classes) {
      std::snprintf(buffer, sizeof buffer, "%.17g", dist.t);
      out << buffer << ",\"" << c.partition.to_string() << "\",";
      std::snprintf(buffer, sizeof buffer, "%.17g", c.probability);
      out << buffer << '\n';
    }
}

inline Json to_json(const ExactDistribution& dist, const ClassFunction& f) {
  Json classes = Json::array();
  for (const auto& c : dist.classes) {
    Json entry;
    entry["partition"] = to_json(c.partition);
    entry["class_size"] = c.class_size.str();
    entry["probability"] = to_double(c.probability);
    entry["exact"] = to_exact_string(c.probability);
    entry["per_element"] = to_double(c.per_element);
    entry["per_element_exact"] = to_exact_string(c.per_element);
    classes.push_back(std::move(entry));
  }
  Json out;
  out["n"] = dist.n;
  out["generator"] = generator_json(f);
  out["weights"] = weights_json(f);
  out["start"] = to_json(dist.start);
  out["classes"] = std::move(classes);
  return out;
}

inline Json exact_value_json(const BigRational& q) {
  Json out;
  out["exact"] = to_exact_string(q);
  out["decimal"] = to_decimal_string(q);
  out["value"] = to_double(q);
  return out;
}

inline Json to_json(const EigenGroups& groups) {
  Json out = Json::array();
  for (std::size_t g = 0; g < groups.groups.size(); ++g) {
    Json members = Json::array();
    for (const auto& nu : groups.groups[g]) members.push_back(to_json(nu));
    Json entry;
    entry["eigenvalue"] = to_exact_string(groups.eigenvalues[g]);
    entry["reps"] = std::move(members);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace symwalk::io
