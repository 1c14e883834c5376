#include "tilekit/weighted.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

namespace tilekit {

using nlohmann::json;

Rat WeightedGraph::total_weight() const {
  Rat sum = 0;
  for (const Rat& w : weights) sum += w;
  return sum;
}

WeightedGraph build_T(const RParams& params) {
  if (params.variant != Variant::A) throw std::invalid_argument("build_T: variant A required");
  int m = params.m;
  WeightedGraph w;
  w.graph = Graph(m + 1);
  for (int u = 0; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) w.graph.add_edge(u, v);
  w.weights.assign(m + 1, Rat(params.s, params.r));
  w.weights[m] = Rat(params.t, params.r);
  return w;
}

WeightedGraph scale(const WeightedGraph& w, const Rat& phi) {
  if (phi <= 0) throw std::invalid_argument("scale: phi must be positive");
  WeightedGraph out = w;
  for (Rat& x : out.weights) x *= phi;
  return out;
}

std::vector<Rat> accumulated_weights(const PackingCert& cert) {
  std::vector<Rat> acc(cert.host.n(), Rat(0));
  for (const auto& piece : cert.pieces)
    for (size_t i = 0; i < piece.map.size(); ++i) acc[piece.map[i]] += piece.pattern.weights[i];
  return acc;
}

Rat residue(const PackingCert& cert) {
  Rat total = 0;
  for (const auto& piece : cert.pieces) total += piece.pattern.total_weight();
  return Rat(cert.host.n()) - total;
}

VerifyReport verify_packing(const PackingCert& cert, PackingMode mode) {
  VerifyReport rep;
  for (size_t pi = 0; pi < cert.pieces.size(); ++pi) {
    const auto& piece = cert.pieces[pi];
    const Graph& pat = piece.pattern.graph;
    if (static_cast<int>(piece.map.size()) != pat.n() ||
        piece.pattern.weights.size() != piece.map.size()) {
      rep.message = "piece " + std::to_string(pi) + ": map/weight arity mismatch";
      return rep;
    }
    // Weight-0 vertices are placement-free: their image carries nothing, so
    // they are exempt from injectivity and edge preservation.
    std::set<int> image;
    for (size_t i = 0; i < piece.map.size(); ++i) {
      int hv = piece.map[i];
      if (hv < 0 || hv >= cert.host.n()) {
        rep.message = "piece " + std::to_string(pi) + ": vertex out of host range";
        rep.vertex = hv;
        return rep;
      }
      if (piece.pattern.weights[i] == 0) continue;
      if (!image.insert(hv).second) {
        rep.message = "piece " + std::to_string(pi) + ": embedding not injective";
        rep.vertex = hv;
        return rep;
      }
    }
    for (int u = 0; u < pat.n(); ++u)
      for (int v : pat.neighbors(u)) {
        if (v < u) continue;
        if (piece.pattern.weights[u] == 0 || piece.pattern.weights[v] == 0) continue;
        if (!cert.host.has_edge(piece.map[u], piece.map[v])) {
          rep.message = "piece " + std::to_string(pi) + ": edge not present in host";
          rep.edge = {piece.map[u], piece.map[v]};
          return rep;
        }
      }
    for (const Rat& w : piece.pattern.weights)
      if (w < 0) {
        rep.message = "piece " + std::to_string(pi) + ": negative weight";
        return rep;
      }
  }
  auto acc = accumulated_weights(cert);
  for (int v = 0; v < cert.host.n(); ++v) {
    if (acc[v] > 1) {
      rep.message = "vertex " + std::to_string(v) + " overloaded: " + rat_str(acc[v]);
      rep.vertex = v;
      return rep;
    }
    if (mode == PackingMode::Factor && acc[v] != 1) {
      rep.message = "vertex " + std::to_string(v) + " has weight " + rat_str(acc[v]) + " != 1";
      rep.vertex = v;
      return rep;
    }
  }
  rep.ok = true;
  rep.message = mode == PackingMode::Factor ? "ok(factor)" : "ok(packing)";
  return rep;
}

PackingCert t_factor_of_clique(const RParams& params) {
  if (params.variant != Variant::A)
    throw std::invalid_argument("t_factor_of_clique: variant A required");
  int m = params.m;
  WeightedGraph T = build_T(params);
  PackingCert cert;
  cert.host = Graph(m + 1);
  for (int u = 0; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) cert.host.add_edge(u, v);
  // copy i sends the light vertex to host vertex i and the rest in order
  for (int i = 0; i <= m; ++i) {
    PackingPiece piece;
    piece.pattern = T;
    piece.map.resize(m + 1);
    int at = 0;
    for (int hv = 0; hv <= m; ++hv)
      if (hv != i) piece.map[at++] = hv;
    piece.map[m] = i;
    cert.pieces.push_back(std::move(piece));
  }
  return cert;
}

PackingCert scale_cert(const PackingCert& cert, const Rat& phi) {
  PackingCert out;
  out.host = cert.host;
  for (const auto& piece : cert.pieces) out.pieces.push_back({scale(piece.pattern, phi), piece.map});
  return out;
}

namespace {

json weighted_graph_to_json(const WeightedGraph& w) {
  json j;
  j["n"] = w.graph.n();
  json edges = json::array();
  for (int u = 0; u < w.graph.n(); ++u)
    for (int v : w.graph.neighbors(u))
      if (v > u) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  json ws = json::array();
  for (const Rat& x : w.weights) ws.push_back(rat_str(x));
  j["weights"] = std::move(ws);
  return j;
}

WeightedGraph weighted_graph_from_json(const json& j) {
  WeightedGraph w;
  w.graph = Graph(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) w.graph.add_edge(e[0].get<int>(), e[1].get<int>());
  for (const auto& x : j.at("weights")) w.weights.push_back(parse_rat(x.get<std::string>()));
  return w;
}

}  // namespace

std::string cert_to_json(const PackingCert& cert) {
  json j;
  json h;
  h["n"] = cert.host.n();
  json host_edges = json::array();
  for (int u = 0; u < cert.host.n(); ++u)
    for (int v : cert.host.neighbors(u))
      if (v > u) host_edges.push_back({u, v});
  h["edges"] = std::move(host_edges);
  j["host"] = std::move(h);
  json pieces = json::array();
  for (const auto& piece : cert.pieces) {
    json p;
    p["pattern"] = weighted_graph_to_json(piece.pattern);
    p["map"] = piece.map;
    pieces.push_back(std::move(p));
  }
  j["pieces"] = std::move(pieces);
  json acc = json::array();
  for (const Rat& x : accumulated_weights(cert)) acc.push_back(rat_str(x));
  j["accumulated"] = std::move(acc);
  return j.dump();
}

PackingCert cert_from_json(const std::string& text) {
  json j = json::parse(text);
  PackingCert cert;
  const auto& h = j.at("host");
  cert.host = Graph(h.at("n").get<int>());
  for (const auto& e : h.at("edges")) cert.host.add_edge(e[0].get<int>(), e[1].get<int>());
  for (const auto& p : j.at("pieces")) {
    PackingPiece piece;
    piece.pattern = weighted_graph_from_json(p.at("pattern"));
    piece.map = p.at("map").get<std::vector<int>>();
    cert.pieces.push_back(std::move(piece));
  }
  return cert;
}

}  // namespace tilekit
