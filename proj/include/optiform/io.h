#ifndef OPTIFORM_IO_H_
#define OPTIFORM_IO_H_

// JSON instance documents. Every document is an object with a "kind" field:
// "cpnet", "scsp", "ppgame", "payoffgame" or "graph".
//
// Values: booleans are true/false or 0/1; rationals are JSON numbers (read
// exactly from their decimal text) or strings such as "2/5" and "0.4";
// infinity is "inf"; product values are arrays.
//
// Serialization is canonical: keys sorted, tables flattened row-major,
// fractions as "p/q", infinity as "inf", booleans as 0/1.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "optiform/cpnet.h"
#include "optiform/graph.h"
#include "optiform/pgame.h"
#include "optiform/softcsp.h"

namespace optiform::io {

using Document = std::variant<CpNet, SoftCsp, PpGame, PayoffGame, Digraph>;

// "cpnet", "scsp", ...
std::string KindName(const Document& doc);

// Throws ValidationError on syntax errors (with line and column) and on
// structural errors (with the path of the offending field).
Document ParseDocument(std::string_view text);
Document ReadDocument(const std::filesystem::path& path);

nlohmann::json ToJson(const Document& doc);
// Canonical text, newline terminated.
std::string Serialize(const Document& doc);

// "boolean", "fuzzy", "weighted", "product(weighted,fuzzy)".
SemiringSpec ParseSemiring(std::string_view text);

nlohmann::json ValueToJson(const SemiringValue& v);
// Reads a value without checking any carrier.
SemiringValue ValueFromJson(const nlohmann::json& j, const std::string& path);

}  // namespace optiform::io

#endif  // OPTIFORM_IO_H_
