#ifndef OPTIFORM_TESTS_SUPPORT_H_
#define OPTIFORM_TESTS_SUPPORT_H_

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "optiform/cli.h"
#include "optiform/io.h"

namespace optiform {

// Readable gtest failure messages.
inline void PrintTo(const SemiringValue& v, std::ostream* os) {
  *os << v.ToString();
}

}  // namespace optiform

namespace optiform::testing {

inline std::filesystem::path Fixture(const std::string& name) {
  return std::filesystem::path(OPTIFORM_FIXTURE_DIR) / name;
}

template <typename T>
T Load(const std::string& name) {
  return std::get<T>(io::ReadDocument(Fixture(name)));
}

// Value labels glued together: "abcd", "bbb", "nn".
inline std::string Word(const std::vector<Variable>& vars,
                        const Assignment& a) {
  std::string out;
  for (const std::string& label : Labels(vars, a)) out += label;
  return out;
}

inline std::set<std::string> Words(const std::vector<Variable>& vars,
                                   const std::vector<Assignment>& as) {
  std::set<std::string> out;
  for (const Assignment& a : as) out.insert(Word(vars, a));
  return out;
}

inline std::vector<Assignment> Assignments(const std::vector<Solution>& s) {
  std::vector<Assignment> out;
  for (const Solution& x : s) out.push_back(x.assignment);
  return out;
}

// Inverse of Word for single-character labels.
inline Assignment Parse(const std::vector<Variable>& vars,
                        const std::string& word) {
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    a.push_back(FindValue(vars[i], std::string(1, word[i])));
  }
  return a;
}

inline std::vector<Assignment> Intersect(std::vector<Assignment> a,
                                         std::vector<Assignment> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Assignment> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace optiform::testing

#endif  // OPTIFORM_TESTS_SUPPORT_H_
