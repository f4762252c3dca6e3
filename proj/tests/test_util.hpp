#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusionring/ideal.hpp"

namespace fusionring::test {

inline Weight W(std::initializer_list<int> c) { return make_weight(c); }

inline const RootDatum& R(const std::string& code) { return root_datum(parse_lie_type(code)); }

inline std::vector<std::string> data_lines(const std::string& name) {
  std::ifstream in(std::string(FUSIONRING_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

// Coordinates written as a:b:d mean (a*k + b)/d.
inline std::vector<Weight> symbolic_weights(const std::string& name, int k) {
  std::vector<Weight> out;
  for (const auto& line : data_lines(name)) {
    std::istringstream is(line);
    Weight w;
    int i = 0;
    for (std::string tok; is >> tok; ++i) {
      int a = 0, b = 0, d = 1;
      if (std::sscanf(tok.c_str(), "%d:%d:%d", &a, &b, &d) != 3) throw std::runtime_error("bad token " + tok);
      const int num = a * k + b;
      if (num % d != 0) throw std::runtime_error("parity mismatch in " + name);
      w[i] = num / d;
    }
    out.push_back(w);
  }
  return out;
}

struct PrintedEntry {
  WeylWord word;  // 0-based letters, leftmost first
  Weight lambda_w;
};

// Lines "3 1<TAB>2 5": the word w_3 w_1 and lambda_w = lambda_2 + lambda_5.
inline std::vector<PrintedEntry> printed_words(const std::string& name) {
  std::vector<PrintedEntry> out;
  for (const auto& line : data_lines(name)) {
    const auto tab = line.find('\t');
    PrintedEntry e;
    std::istringstream ws(line.substr(0, tab)), ls(line.substr(tab + 1));
    for (std::string t; ws >> t;)
      if (t != "id") e.word.push_back(std::stoi(t) - 1);
    for (std::string t; ls >> t;)
      if (t != "0") e.lambda_w[std::stoi(t) - 1] += 1;
    out.push_back(e);
  }
  return out;
}

}  // namespace fusionring::test
