#include "densecsp/io.hpp"

#include <fstream>
#include <sstream>

namespace densecsp {

namespace {

Json edges_to_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back(Json::array({e.u, e.v}));
  return arr;
}

std::vector<Edge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("'edges' must be an array of [u,v] pairs");
  std::vector<Edge> edges;
  edges.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ValidationError("'edges' must be an array of [u,v] pairs");
    edges.push_back(Edge{item[0].get<int>(), item[1].get<int>()});
  }
  return edges;
}

const Json& require(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind_name(inst.kind());
  j["q"] = inst.q();
  j["n"] = inst.n();
  j["edges"] = edges_to_json(inst.edges());

  Json allowed = Json::array();
  const int m = inst.edge_count();
  const int q = inst.q();
  for (int e = 0; e < m; ++e) {
    Json pairs = Json::array();
    for (int su = 0; su < q; ++su)
      for (int sv = 0; sv < q; ++sv)
        if (inst.allows(e, su, sv)) pairs.push_back(Json::array({su, sv}));
    allowed.push_back(std::move(pairs));
  }
  j["allowed"] = std::move(allowed);

  if (inst.has_pi()) {
    Json pi = Json::array();
    for (int e = 0; e < m; ++e) {
      Json row = Json::array();
      for (int sa = 0; sa < q; ++sa) row.push_back(inst.pi(e, sa));
      pi.push_back(std::move(row));
    }
    j["pi"] = std::move(pi);
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("instance file must be a JSON object");
  const int version = require(j, "format_version").get<int>();
  if (version != kFormatVersion)
    throw ValidationError("unsupported format_version " + std::to_string(version));

  const std::string kind_str = require(j, "kind").get<std::string>();
  const auto kind = kind_from_name(kind_str);
  if (!kind) throw ValidationError("unknown kind '" + kind_str + "'");
  const int q = require(j, "q").get<int>();
  const int n = require(j, "n").get<int>();
  if (q < 1) throw ValidationError("q must be at least 1");
  std::vector<Edge> edges = edges_from_json(require(j, "edges"));

  const Json& allowed = require(j, "allowed");
  if (!allowed.is_array() || allowed.size() != edges.size())
    throw ValidationError("'allowed' must be an array parallel to 'edges'");

  std::vector<ConstraintTable> tables;
  tables.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ConstraintTable table(q);
    for (const Json& pair : allowed[e]) {
      if (!pair.is_array() || pair.size() != 2)
        throw ValidationError("'allowed' entries must be [sigma_u, sigma_v] pairs");
      const int su = pair[0].get<int>();
      const int sv = pair[1].get<int>();
      if (su < 0 || su >= q || sv < 0 || sv >= q)
        throw ValidationError("allowed pair label out of range");
      table.set(su, sv);
    }
    tables.push_back(std::move(table));
  }

  if (*kind == Kind::Projection) {
    const Json& pi = require(j, "pi");
    if (!pi.is_array() || pi.size() != edges.size())
      throw ValidationError("'pi' must be an array parallel to 'edges'");
    std::vector<int> pi_flat;
    pi_flat.reserve(edges.size() * static_cast<std::size_t>(q));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Json& row = pi[e];
      if (!row.is_array() || static_cast<int>(row.size()) != q)
        throw ValidationError("each 'pi' entry must list q images");
      for (int sa = 0; sa < q; ++sa) {
        const int sb = row[static_cast<std::size_t>(sa)].get<int>();
        if (sb < 0 || sb >= q) throw ValidationError("pi image out of range");
        pi_flat.push_back(sb);
      }
    }
    Instance inst(Kind::Projection, q, n, std::move(edges), {}, std::move(pi_flat));
    // The redundant allowed tables must agree with pi.
    for (int e = 0; e < inst.edge_count(); ++e)
      if (!(tables[static_cast<std::size_t>(e)] == inst.table(e)))
        throw ValidationError("'allowed' disagrees with 'pi' on edge " +
                              std::to_string(e));
    return inst;
  }

  return Instance(*kind, q, n, std::move(edges), std::move(tables));
}

Json assignment_to_json(const Assignment& phi) {
  Json j;
  j["n"] = phi.size();
  j["labels"] = phi.labels;
  return j;
}

Assignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("assignment must be a JSON object");
  const int n = require(j, "n").get<int>();
  const Json& labels = require(j, "labels");
  if (!labels.is_array() || static_cast<int>(labels.size()) != n)
    throw ValidationError("'labels' must be an array of length n");
  Assignment phi;
  phi.labels.reserve(labels.size());
  for (const Json& l : labels) phi.labels.push_back(l.get<int>());
  return phi;
}

Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["n"] = g.n();
  j["edges"] = edges_to_json(g.edges());
  return j;
}

SimpleGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("graph file must be a JSON object");
  const int n = require(j, "n").get<int>();
  return SimpleGraph(n, edges_from_json(require(j, "edges")));
}

Json guarantee_to_json(const GuaranteeInfo& g) {
  Json j;
  switch (g.form) {
    case GuaranteeInfo::Form::None: j["form"] = "none"; break;
    case GuaranteeInfo::Form::Exact: j["form"] = "exact"; break;
    case GuaranteeInfo::Form::Approx: j["form"] = "approx"; break;
  }
  if (g.form == GuaranteeInfo::Form::Exact) {
    j["zero"] = g.bound.is_zero();
    Json factors = Json::array();
    for (const auto& f : g.bound.factors()) {
      Json fj;
      fj["base"] = rational_to_string(f.base);
      fj["exp_num"] = f.exp_num;
      fj["exp_den"] = f.exp_den;
      factors.push_back(std::move(fj));
    }
    j["factors"] = std::move(factors);
    j["approx"] = g.bound.to_double();
  } else if (g.form == GuaranteeInfo::Form::Approx) {
    j["approx"] = g.approx_bound;
  }
  j["preconditions_verified"] = g.preconditions_verified;
  if (g.met)
    j["met"] = *g.met;
  else
    j["met"] = nullptr;
  j["note"] = g.note;
  return j;
}

GuaranteeInfo guarantee_from_json(const Json& j) {
  GuaranteeInfo g;
  const std::string form = require(j, "form").get<std::string>();
  if (form == "none") {
    g.form = GuaranteeInfo::Form::None;
  } else if (form == "exact") {
    g.form = GuaranteeInfo::Form::Exact;
    if (j.value("zero", false)) {
      g.bound = PowerProduct::zero();
    } else {
      for (const Json& fj : require(j, "factors")) {
        g.bound.mul(parse_rational(require(fj, "base").get<std::string>()),
                    require(fj, "exp_num").get<long>(),
                    require(fj, "exp_den").get<long>());
      }
    }
  } else if (form == "approx") {
    g.form = GuaranteeInfo::Form::Approx;
    g.approx_bound = require(j, "approx").get<double>();
  } else {
    throw ValidationError("unknown guarantee form '" + form + "'");
  }
  g.preconditions_verified = j.value("preconditions_verified", false);
  const auto met = j.find("met");
  if (met != j.end() && !met->is_null()) g.met = met->get<bool>();
  g.note = j.value("note", "");
  return g;
}

Json report_to_json(const SolveReport& report, const Instance* embed) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["assignment"] = assignment_to_json(report.assignment);
  j["edges"] = report.edge_total;
  j["satisfied"] = report.satisfied;
  j["value"] = rational_to_string(report.value);
  j["value_approx"] = rational_to_double(report.value);
  j["guarantee"] = guarantee_to_json(report.guarantee);
  j["seed"] = report.seed;
  j["level"] = report.level;
  j["work"] = report.work;
  if (embed) j["instance"] = instance_to_json(*embed);
  return j;
}

std::string dump_deterministic(const Json& j) {
  return j.dump(2) + "\n";
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("cannot parse '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << dump_deterministic(j);
}

Instance load_instance(const std::string& path) {
  return instance_from_json(load_json_file(path));
}

Assignment load_assignment(const std::string& path) {
  return assignment_from_json(load_json_file(path));
}

SimpleGraph load_graph(const std::string& path) {
  return graph_from_json(load_json_file(path));
}

}  // namespace densecsp
