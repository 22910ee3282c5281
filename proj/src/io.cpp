#include "springer/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (strip(s).empty()) return out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(strip(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

long parse_long(const std::string& text) {
  std::string t = strip(text);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  require(!t.empty() && ec == std::errc() && ptr == t.data() + t.size(), "malformed integer '" + text + "'");
  return v;
}

int parse_sign(const std::string& text) {
  std::string t = strip(text);
  if (t == "+" || t == "+1" || t == "1") return 1;
  if (t == "-" || t == "-1") return -1;
  throw ArgumentError("malformed sign '" + text + "'");
}

}  // namespace

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  for (const auto& item : split(text, ',')) parts.push_back(static_cast<int>(parse_long(item)));
  return Partition(parts);
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_long(text));
  long den = parse_long(text.substr(slash + 1));
  require(den != 0, "zero denominator in '" + text + "'");
  return Rat(parse_long(text.substr(0, slash)), den);
}

SignMap parse_epsilon(const std::string& text) {
  SignMap out;
  for (const auto& item : split(text, ',')) {
    auto colon = item.find(':');
    require(colon != std::string::npos, "sign entry '" + item + "' must look like part:sign");
    int part = static_cast<int>(parse_long(item.substr(0, colon)));
    require(out.emplace(part, parse_sign(item.substr(colon + 1))).second,
            "part " + std::to_string(part) + " signed twice");
  }
  return out;
}

MarkedSymplectic parse_marked(const std::string& lambda_text, const std::string& epsilon_text) {
  return MarkedSymplectic(parse_partition(lambda_text), parse_epsilon(epsilon_text));
}

ShuffleOrder parse_order(const std::string& text) { return ShuffleOrder(strip(text)); }

std::string render_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out;
}

std::string render_rational(const Rat& x) { return to_string(x); }

std::string render_epsilon(const SignMap& eps) {
  std::string out;
  for (const auto& [part, sgn] : eps) out += (out.empty() ? "" : ",") + std::to_string(part) + (sgn > 0 ? ":+" : ":-");
  return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const RatSeq& s) {
  Json j = Json::array();
  for (const auto& x : s.entries()) {
    if (is_integer(x))
      j.push_back(x.numerator());
    else
      j.push_back(to_string(x));
  }
  return j;
}

Json to_json(const SignMap& eps) {
  Json j = Json::object();
  for (const auto& [part, sgn] : eps) j[std::to_string(part)] = sgn;
  return j;
}

Json to_json(const MarkedSymplectic& ms) {
  Json j;
  j["lambda"] = to_json(ms.lambda());
  j["epsilon"] = to_json(ms.epsilon());
  return j;
}

Json to_json(const BiPartition& bp) {
  Json j;
  j["nu"] = to_json(bp.nu);
  j["mu"] = to_json(bp.mu);
  return j;
}

Json to_json(const SpringerDatum& sd) {
  Json j;
  j["k"] = sd.k;
  j["alpha"] = to_json(sd.alpha.trimmed());
  j["beta"] = to_json(sd.beta.trimmed());
  return j;
}

Json to_json(const BarTrace& tr) {
  Json j;
  j["r"] = tr.r;
  j["source"] = to_json(tr.source);
  j["frak_s"] = tr.frak_s;
  j["j_a"] = tr.j_a;
  j["j_b"] = tr.j_b;
  j["bar_first"] = tr.bar_first;
  j["derived"] = to_json(tr.derived);
  return j;
}

Partition partition_from_json(const Json& j) {
  require(j.is_array(), "partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

SignMap epsilon_from_json(const Json& j) {
  require(j.is_object(), "signs must be a JSON object");
  SignMap out;
  for (const auto& [key, val] : j.items()) {
    require(val.is_number_integer(), "sign must be an integer");
    out.emplace(static_cast<int>(parse_long(key)), parse_sign(std::to_string(val.get<int>())));
  }
  return out;
}

MarkedSymplectic marked_from_json(const Json& j) {
  require(j.contains("lambda") && j.contains("epsilon"), "couple needs lambda and epsilon");
  return MarkedSymplectic(partition_from_json(j.at("lambda")), epsilon_from_json(j.at("epsilon")));
}

}  // namespace springer
