#include "gh/scalar.hpp"

namespace gh {

std::string to_string(const Scalar& s) {
  return s.get_str();
}

Scalar parse_scalar(std::string_view text) {
  std::string t(text);
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  Scalar s;
  if (t.empty() || s.set_str(t, 10) != 0) throw MalformedDefinition("bad rational '" + std::string(text) + "'");
  s.canonicalize();
  if (s.get_den() == 0) throw MalformedDefinition("zero denominator in '" + std::string(text) + "'");
  return s;
}

int koszul_sign(const std::vector<int>& degrees_a, const std::vector<int>& degrees_b) {
  int pa = 0, pb = 0;
  for (int d : degrees_a) pa ^= parity(d);
  for (int d : degrees_b) pb ^= parity(d);
  return (pa & pb) ? -1 : 1;
}

}  // namespace gh
