#include "utid/io.hpp"

#include <fstream>
#include <regex>

namespace utid {

using nlohmann::json;

namespace {

BigInt parse_integer(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    return BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    static const std::regex pattern("[+-]?[0-9]+");
    const auto s = v.get<std::string>();
    if (!std::regex_match(s, pattern)) throw InputError("not a decimal integer: \"" + s + "\"");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError("expected an integer or decimal string, got " + v.dump());
}

GeneratorSet parse_generators(const json& arr) {
  if (!arr.is_array()) throw InputError("\"generators\" must be an array");
  if (arr.empty()) throw InputError("empty generator list");
  GeneratorSet G;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 6) throw InputError("each generator must be a list of six integers");
    G.push_back(Matrix{parse_integer(t[0]), parse_integer(t[1]), parse_integer(t[2]), parse_integer(t[3]),
                       parse_integer(t[4]), parse_integer(t[5])});
  }
  return G;
}

Instance parse_instance(const json& obj, std::size_t position) {
  if (!obj.is_object()) throw InputError("instance must be an object");
  if (!obj.contains("generators")) throw InputError("instance without \"generators\"");
  Instance inst;
  inst.name = obj.value("name", "instance-" + std::to_string(position + 1));
  inst.generators = parse_generators(obj.at("generators"));
  return inst;
}

json word_to_json(const Word& w) {
  json arr = json::array();
  for (auto i : w) arr.push_back(i + 1);
  return arr;
}

}  // namespace

std::vector<Instance> parse_instances(const json& doc) {
  const json* list = nullptr;
  if (doc.is_array()) list = &doc;
  else if (doc.is_object() && doc.contains("instances")) list = &doc.at("instances");
  else if (doc.is_object() && doc.contains("generators")) return {parse_instance(doc, 0)};
  if (!list || !list->is_array()) throw InputError("expected {\"instances\": [...]}");
  if (list->empty()) throw InputError("no instances");
  std::vector<Instance> out;
  for (std::size_t i = 0; i < list->size(); ++i) out.push_back(parse_instance((*list)[i], i));
  return out;
}

std::vector<Instance> load_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instances(doc);
}

json generators_to_json(const GeneratorSet& G) {
  json arr = json::array();
  for (const auto& m : G) arr.push_back({m.a.str(), m.b.str(), m.c.str(), m.d.str(), m.e.str(), m.f.str()});
  return arr;
}

json verdict_record(const Instance& inst, const DecisionTriple& d, const RecordOptions& opt, double millis) {
  json rec;
  rec["name"] = inst.name;
  rec["generators"] = generators_to_json(inst.generators);
  json problems = json::object();
  for (auto t : {Target::identity, Target::u2, Target::u10}) {
    const bool wanted = t == Target::identity ? opt.identity : t == Target::u2 ? opt.u2 : opt.u10;
    if (!wanted) continue;
    const Verdict& v = d[t];
    json p;
    p["verdict"] = v.reachable ? "yes" : "no";
    p["rule"] = v.rule;
    if (v.reachable) {
      p["witness_length"] = v.witness.size();
      if (opt.witness) p["witness"] = word_to_json(v.witness);
    }
    problems[name(t)] = std::move(p);
  }
  rec["problems"] = std::move(problems);
  if (opt.trace) rec["trace"] = render_trace(d.trace);
  rec["time_ms"] = millis;
  return rec;
}

std::vector<std::string> check_verdicts(const json& doc) {
  const json* list = nullptr;
  if (doc.is_object() && doc.contains("results")) list = &doc.at("results");
  else if (doc.is_array()) list = &doc;
  if (!list || !list->is_array()) throw InputError("expected {\"results\": [...]}");
  std::vector<std::string> failures;
  for (const auto& rec : *list) {
    if (!rec.is_object() || !rec.contains("generators") || !rec.contains("problems"))
      throw InputError("verdict record without generators/problems");
    const GeneratorSet G = parse_generators(rec.at("generators"));
    const std::string nm = rec.value("name", "?");
    std::array<bool, 3> yes{false, false, false};
    std::array<bool, 3> present{false, false, false};
    const std::array<Target, 3> targets{Target::identity, Target::u2, Target::u10};
    for (std::size_t k = 0; k < 3; ++k) {
      const Target t = targets[k];
      if (!rec.at("problems").contains(name(t))) continue;
      present[k] = true;
      const json& p = rec.at("problems").at(name(t));
      const std::string verdict = p.value("verdict", "");
      if (verdict != "yes" && verdict != "no") throw InputError("verdict must be yes or no");
      yes[k] = verdict == "yes";
      if (!yes[k]) continue;
      if (!p.contains("witness")) continue;  // emitted without --witness
      Word w;
      for (const auto& x : p.at("witness")) {
        if (!x.is_number_integer() || x.get<long long>() < 1 || static_cast<std::size_t>(x.get<long long>()) > G.size())
          throw InputError("witness letter out of range in " + nm);
        w.push_back(static_cast<std::size_t>(x.get<long long>() - 1));
      }
      if (w.empty() || !meets(product_of_word(G, w), t))
        failures.push_back(nm + ": " + name(t) + " witness does not multiply into the target class");
    }
    if (present[0] && present[1] && yes[0] && !yes[1]) failures.push_back(nm + ": identity yes but u2 no");
    if (present[1] && present[2] && yes[1] && !yes[2]) failures.push_back(nm + ": u2 yes but u10 no");
  }
  return failures;
}

}  // namespace utid
