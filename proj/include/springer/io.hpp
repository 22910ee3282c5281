#pragma once

// Text grammars and JSON forms shared by the command-line tool.
//   partition:  4,2,2        (empty string = empty partition)
//   rational:   p/q or an integer
//   signs:      4:+,2:-      (also 4:+1, 4:-1)
//   order:      ABA

#include <string>

#include <json.hpp>

#include "springer/correspondence.hpp"
#include "springer/extremal.hpp"
#include "springer/pab.hpp"
#include "springer/partition.hpp"

namespace springer {

using Json = nlohmann::ordered_json;

Partition parse_partition(const std::string& text);
Rat parse_rational(const std::string& text);
SignMap parse_epsilon(const std::string& text);
MarkedSymplectic parse_marked(const std::string& lambda_text, const std::string& epsilon_text);
ShuffleOrder parse_order(const std::string& text);

std::string render_partition(const Partition& p);
std::string render_rational(const Rat& x);
std::string render_epsilon(const SignMap& eps);

Json to_json(const Partition& p);
Json to_json(const RatSeq& s);
Json to_json(const SignMap& eps);
Json to_json(const MarkedSymplectic& ms);
Json to_json(const BiPartition& bp);
Json to_json(const SpringerDatum& sd);
Json to_json(const BarTrace& tr);

Partition partition_from_json(const Json& j);
SignMap epsilon_from_json(const Json& j);
MarkedSymplectic marked_from_json(const Json& j);

}  // namespace springer
