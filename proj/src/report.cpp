#include "entrolab/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "json.hpp"

namespace entrolab {

using nlohmann::json;

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  for (const auto& i : instances)
    if (!i.pass) return false;
  return true;
}

std::string current_timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json check_to_json(const CheckResult& c) {
  return json{{"anchor", c.anchor},   {"claim", c.claim_id},
              {"margin", c.worst_margin}, {"order", c.worst_order},
              {"pass", c.pass},       {"points", c.points},
              {"x", c.worst_x}};
}

CheckResult check_from_json(const json& j) {
  CheckResult c;
  c.anchor = j.at("anchor").get<std::string>();
  c.claim_id = j.at("claim").get<std::string>();
  c.worst_margin = j.at("margin").get<double>();
  c.worst_order = j.at("order").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  c.points = j.at("points").get<long long>();
  c.worst_x = j.at("x").get<double>();
  return c;
}

}  // namespace

std::string emit_report(const Report& r) {
  json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["timestamp"] = r.timestamp;
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
  j["instances"] = json::array();
  for (const auto& i : r.instances) {
    j["instances"].push_back(json{{"entropy", i.entropy},
                                  {"family", i.family},
                                  {"g", i.g},
                                  {"label", i.label},
                                  {"n", i.n},
                                  {"order", i.order},
                                  {"pass", i.pass},
                                  {"t", i.t},
                                  {"verdict", i.verdict}});
  }
  j["samples"] = json::array();
  for (const auto& s : r.samples) {
    j["samples"].push_back(json{{"decision", s.decision},
                                {"estimate", s.estimate},
                                {"exact", s.exact},
                                {"kind", s.kind},
                                {"ones", s.ones},
                                {"seed", s.seed},
                                {"shots", s.shots},
                                {"zeros", s.zeros}});
  }
  j["qstar"] = json::array();
  for (const auto& q : r.qstar) {
    j["qstar"].push_back(json{{"found", q.found}, {"q", q.q_star}, {"x", q.x}});
  }
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.tool = j.at("tool").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  for (const auto& i : j.at("instances")) {
    InstanceRecord rec;
    rec.entropy = i.at("entropy").get<double>();
    rec.family = i.at("family").get<std::string>();
    rec.g = i.at("g").get<double>();
    rec.label = i.at("label").get<std::string>();
    rec.n = i.at("n").get<int>();
    rec.order = i.at("order").get<std::string>();
    rec.pass = i.at("pass").get<bool>();
    rec.t = i.at("t").get<double>();
    rec.verdict = i.at("verdict").get<std::string>();
    r.instances.push_back(rec);
  }
  for (const auto& s : j.at("samples")) {
    SampleRecord rec;
    rec.decision = s.at("decision").get<std::string>();
    rec.estimate = s.at("estimate").get<double>();
    rec.exact = s.at("exact").get<double>();
    rec.kind = s.at("kind").get<std::string>();
    rec.ones = s.at("ones").get<long long>();
    rec.seed = s.at("seed").get<std::uint64_t>();
    rec.shots = s.at("shots").get<long long>();
    rec.zeros = s.at("zeros").get<long long>();
    r.samples.push_back(rec);
  }
  for (const auto& q : j.at("qstar")) {
    QStarRecord rec;
    rec.found = q.at("found").get<bool>();
    rec.q_star = q.at("q").get<double>();
    rec.x = q.at("x").get<double>();
    r.qstar.push_back(rec);
  }
  return r;
}

namespace {

std::string csv17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "type,key,order,n,value1,value2,value3,pass\n";
  for (const auto& c : r.checks) {
    os << "check," << c.claim_id << "," << c.worst_order << ",,"
       << csv17(c.worst_margin) << "," << csv17(c.worst_x) << ",,"
       << (c.pass ? 1 : 0) << "\n";
  }
  for (const auto& i : r.instances) {
    os << "instance," << i.family << "," << i.order << "," << i.n << ","
       << csv17(i.t) << "," << csv17(i.g) << "," << csv17(i.entropy) << ","
       << (i.pass ? 1 : 0) << "\n";
  }
  for (const auto& s : r.samples) {
    os << "sample," << s.kind << ",," << s.shots << "," << csv17(s.estimate)
       << "," << csv17(s.exact) << "," << s.ones << ",\n";
  }
  for (const auto& q : r.qstar) {
    os << "qstar,,,," << csv17(q.x) << "," << csv17(q.q_star) << ",,"
       << (q.found ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace entrolab
