// Copyright 2026 The pathid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pathid/circuit_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <variant>

#include "json.hpp"
#include "pathid/angle.hpp"
#include "pathid/errors.hpp"

namespace pathid {
namespace {

using Json = nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
}

void require_object(const Json& node, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  if (!node.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) fail(path, "unknown key '" + key + "'");
  }
}

const Json& member(const Json& node, const std::string& key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

std::string as_string(const Json& node, const std::string& path) {
  if (!node.is_string()) fail(path, "expected a string");
  return node.get<std::string>();
}

double as_number(const Json& node, const std::string& path) {
  if (!node.is_number()) fail(path, "expected a number");
  return node.get<double>();
}

int as_int(const Json& node, const std::string& path) {
  if (!node.is_number_integer()) fail(path, "expected an integer");
  return node.get<int>();
}

double as_angle(const Json& node, const std::string& path) {
  if (node.is_number()) return node.get<double>();
  if (node.is_string()) {
    try {
      return parse_angle(node.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an angle (number or string such as \"pi/4\")");
}

std::pair<std::string, std::string> mode_pair(const Json& node, const std::string& path) {
  const Json& modes = member(node, "modes", path);
  if (!modes.is_array() || modes.size() != 2) fail(path + "/modes", "expected two mode labels");
  return {as_string(modes[0], path + "/modes/0"), as_string(modes[1], path + "/modes/1")};
}

PhaseExpr parse_phase(const Json& node, const std::string& path) {
  if (!node.is_object()) return PhaseExpr(as_angle(node, path));
  require_object(node, path, {"const", "terms"});
  PhaseExpr out;
  if (node.contains("const")) out.constant = as_angle(node["const"], path + "/const");
  if (node.contains("terms")) {
    const Json& terms = node["terms"];
    if (!terms.is_array()) fail(path + "/terms", "expected an array of [name, coefficient]");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tpath = path + "/terms/" + std::to_string(i);
      if (!terms[i].is_array() || terms[i].size() != 2) fail(tpath, "expected [name, coefficient]");
      out.plus(as_string(terms[i][0], tpath + "/0"), as_number(terms[i][1], tpath + "/1"));
    }
  }
  return out;
}

Json phase_json(const PhaseExpr& phase) {
  if (phase.is_constant()) return phase.constant;
  Json terms = Json::array();
  for (const auto& [name, coef] : phase.terms) terms.push_back(Json::array({name, coef}));
  return Json{{"const", phase.constant}, {"terms", terms}};
}

Element parse_element(const Json& node, const std::string& path, double default_gain) {
  if (!node.is_object()) fail(path, "expected an element object");
  const std::string type = as_string(member(node, "type", path), path + "/type");
  if (type == "phase") {
    require_object(node, path, {"type", "mode", "phase"});
    return PhaseShifter{as_string(member(node, "mode", path), path + "/mode"),
                        parse_phase(member(node, "phase", path), path + "/phase")};
  }
  if (type == "beamsplitter") {
    require_object(node, path, {"type", "modes", "transmissivity"});
    auto [first, second] = mode_pair(node, path);
    BeamSplitter bs{first, second, 0.5};
    if (node.contains("transmissivity")) {
      bs.transmissivity = as_number(node["transmissivity"], path + "/transmissivity");
    }
    return bs;
  }
  if (type == "swap") {
    require_object(node, path, {"type", "modes"});
    auto [first, second] = mode_pair(node, path);
    return ModeSwap{first, second};
  }
  if (type == "loss") {
    require_object(node, path, {"type", "mode", "loss_mode", "efficiency"});
    return LossChannel{as_string(member(node, "mode", path), path + "/mode"),
                       as_string(member(node, "loss_mode", path), path + "/loss_mode"),
                       as_number(member(node, "efficiency", path), path + "/efficiency")};
  }
  if (type == "source") {
    require_object(node, path, {"type", "modes", "gain", "phase", "order"});
    auto [a, b] = mode_pair(node, path);
    PairSourcePerturbative src{a, b, default_gain, 0.0, 2};
    if (node.contains("gain")) src.gain = as_number(node["gain"], path + "/gain");
    if (node.contains("phase")) src.pump_phase = parse_phase(node["phase"], path + "/phase");
    if (node.contains("order")) src.order = as_int(node["order"], path + "/order");
    return src;
  }
  if (type == "spdc") {
    require_object(node, path, {"type", "pump", "modes", "gain"});
    auto [a, b] = mode_pair(node, path);
    PairSourceExactSPDC src{as_string(member(node, "pump", path), path + "/pump"), a, b,
                            default_gain};
    if (node.contains("gain")) src.gain = as_number(node["gain"], path + "/gain");
    return src;
  }
  fail(path + "/type", "unknown element type '" + type + "'");
}

Json element_json(const Element& element) {
  return std::visit(
      Overloaded{
          [](const PhaseShifter& e) {
            return Json{{"type", "phase"}, {"mode", e.mode}, {"phase", phase_json(e.phase)}};
          },
          [](const BeamSplitter& e) {
            return Json{{"type", "beamsplitter"},
                        {"modes", {e.first, e.second}},
                        {"transmissivity", e.transmissivity}};
          },
          [](const ModeSwap& e) {
            return Json{{"type", "swap"}, {"modes", {e.first, e.second}}};
          },
          [](const LossChannel& e) {
            return Json{{"type", "loss"},
                        {"mode", e.mode},
                        {"loss_mode", e.loss_mode},
                        {"efficiency", e.efficiency}};
          },
          [](const PairSourcePerturbative& e) {
            return Json{{"type", "source"},
                        {"modes", {e.mode_a, e.mode_b}},
                        {"gain", e.gain},
                        {"phase", phase_json(e.pump_phase)},
                        {"order", e.order}};
          },
          [](const PairSourceExactSPDC& e) {
            return Json{{"type", "spdc"},
                        {"pump", e.pump},
                        {"modes", {e.mode_a, e.mode_b}},
                        {"gain", e.gain}};
          },
      },
      element);
}

void require_version(const Json& root) {
  if (!root.is_object()) fail("", "expected a JSON object");
  const std::string version = as_string(member(root, "version", ""), "/version");
  if (version != kFormatVersion) {
    fail("/version", "unsupported version '" + version + "', expected '" +
                         std::string(kFormatVersion) + "'");
  }
}

Weight parse_weight(const Json& node, const std::string& path) {
  if (node.is_number()) return {node.get<double>(), 0.0};
  if (node.is_array()) {
    if (node.size() != 2) fail(path, "expected [re, im]");
    return {as_number(node[0], path + "/0"), as_number(node[1], path + "/1")};
  }
  if (node.is_object()) {
    require_object(node, path, {"mag", "phase"});
    const double mag = as_number(member(node, "mag", path), path + "/mag");
    const double phase = node.contains("phase") ? as_angle(node["phase"], path + "/phase") : 0.0;
    return std::polar(mag, phase);
  }
  fail(path, "expected a weight: number, [re, im] or {\"mag\", \"phase\"}");
}

}  // namespace

FockState CircuitFile::input_or_vacuum() const {
  if (input) return *input;
  return FockState(std::vector<int>(circuit.registry().size(), 0));
}

CircuitFile parse_circuit(std::string_view text) {
  const Json root = parse_json(text);
  require_version(root);
  require_object(root, "", {"version", "modes", "model", "g", "elements", "parameters", "input"});

  const Json& modes = member(root, "modes", "");
  if (!modes.is_array() || modes.empty()) fail("/modes", "expected a non-empty array");
  std::vector<ModeInfo> infos;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const std::string path = "/modes/" + std::to_string(i);
    ModeInfo info;
    if (modes[i].is_string()) {
      info.label = modes[i].get<std::string>();
    } else {
      require_object(modes[i], path, {"label", "kind"});
      info.label = as_string(member(modes[i], "label", path), path + "/label");
      if (modes[i].contains("kind")) {
        try {
          info.kind = mode_kind_from_string(as_string(modes[i]["kind"], path + "/kind"));
        } catch (const Error& e) {
          fail(path + "/kind", e.what());
        }
      }
    }
    if (info.label.empty()) fail(path, "empty mode label");
    if (!seen.insert(info.label).second) fail(path, "duplicate mode '" + info.label + "'");
    infos.push_back(std::move(info));
  }

  SourceModel model = SourceModel::kPerturbative;
  if (root.contains("model")) {
    try {
      model = source_model_from_string(as_string(root["model"], "/model"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail("/model", e.what());
    }
  }
  const double gain = root.contains("g") ? as_number(root["g"], "/g")
                                         : (model == SourceModel::kExact ? 0.25 : 0.1);

  std::vector<std::string> parameters;
  if (root.contains("parameters")) {
    const Json& params = root["parameters"];
    if (!params.is_array()) fail("/parameters", "expected an array of names");
    for (std::size_t i = 0; i < params.size(); ++i) {
      parameters.push_back(as_string(params[i], "/parameters/" + std::to_string(i)));
    }
  }

  const Json& elements_json = member(root, "elements", "");
  if (!elements_json.is_array()) fail("/elements", "expected an array");
  std::vector<Element> elements;
  for (std::size_t i = 0; i < elements_json.size(); ++i) {
    elements.push_back(parse_element(elements_json[i], "/elements/" + std::to_string(i), gain));
  }

  std::optional<FockState> input;
  if (root.contains("input")) {
    const Json& occ = root["input"];
    if (!occ.is_array() || occ.size() != infos.size()) {
      fail("/input", "expected one occupation per mode");
    }
    std::vector<int> values;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      const int n = as_int(occ[i], "/input/" + std::to_string(i));
      if (n < 0) fail("/input/" + std::to_string(i), "negative occupation");
      values.push_back(n);
    }
    input = FockState(std::move(values));
  }

  return CircuitFile{Circuit(ModeRegistry::make(std::move(infos)), std::move(elements),
                             std::move(parameters), model, gain),
                     std::move(input)};
}

std::string serialize_circuit(const Circuit& circuit, const std::optional<FockState>& input) {
  Json modes = Json::array();
  for (const auto& info : circuit.registry().modes()) {
    if (info.kind == ModeKind::kDetector) {
      modes.push_back(info.label);
    } else {
      modes.push_back(Json{{"label", info.label}, {"kind", std::string(to_string(info.kind))}});
    }
  }
  Json elements = Json::array();
  for (const auto& element : circuit.elements()) elements.push_back(element_json(element));
  Json root{{"version", kFormatVersion},
            {"modes", modes},
            {"model", std::string(to_string(circuit.model()))},
            {"g", circuit.gain()},
            {"parameters", circuit.parameters()},
            {"elements", elements}};
  if (input) {
    root["input"] = std::vector<int>(input->occupations().begin(), input->occupations().end());
  }
  return root.dump(2) + "\n";
}

WeightedGraph parse_graph(std::string_view text) {
  const Json root = parse_json(text);
  require_version(root);
  require_object(root, "", {"version", "vertices", "edges", "multigraph"});
  const Json& vertices_json = member(root, "vertices", "");
  if (!vertices_json.is_array()) fail("/vertices", "expected an array of labels");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vertices_json.size(); ++i) {
    vertices.push_back(as_string(vertices_json[i], "/vertices/" + std::to_string(i)));
  }
  const Json& edges_json = member(root, "edges", "");
  if (!edges_json.is_array()) fail("/edges", "expected an array");
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    require_object(edges_json[i], path, {"u", "v", "weight"});
    edges.push_back(GraphEdge{as_string(member(edges_json[i], "u", path), path + "/u"),
                              as_string(member(edges_json[i], "v", path), path + "/v"),
                              edges_json[i].contains("weight")
                                  ? parse_weight(edges_json[i]["weight"], path + "/weight")
                                  : Weight{1.0, 0.0}});
  }
  bool multigraph = false;
  if (root.contains("multigraph")) {
    if (!root["multigraph"].is_boolean()) fail("/multigraph", "expected true or false");
    multigraph = root["multigraph"].get<bool>();
  }
  return multigraph ? WeightedGraph::collapse(std::move(vertices), edges)
                    : WeightedGraph(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const WeightedGraph& graph) {
  Json edges = Json::array();
  for (const auto& edge : graph.edges()) {
    edges.push_back(Json{{"u", edge.u},
                         {"v", edge.v},
                         {"weight", Json::array({edge.weight.real(), edge.weight.imag()})}});
  }
  Json root{{"version", kFormatVersion}, {"vertices", graph.vertices()}, {"edges", edges}};
  return root.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + temp + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("short write to '" + temp + "'");
  }
  if (std::rename(temp.c_str(), path.c_str()) != 0) {
    std::remove(temp.c_str());
    throw Error("cannot rename '" + temp + "' to '" + path + "'");
  }
}

}  // namespace pathid
