#include "unipoint/tolerances.hpp"

#include <array>

#include "unipoint/error.hpp"

namespace unipoint {

namespace {

using Field = double Tolerances::*;

struct Entry {
  const char* name;
  Field field;
};

constexpr std::array<Entry, 11> kEntries{{
    {"zero-threshold", &Tolerances::zero_threshold},
    {"root-residual", &Tolerances::root_residual},
    {"newton-residual", &Tolerances::newton_residual},
    {"inner-threshold", &Tolerances::inner_threshold},
    {"inner-ambiguous", &Tolerances::inner_ambiguous},
    {"deflation", &Tolerances::deflation},
    {"frame-degeneracy", &Tolerances::frame_degeneracy},
    {"branch-separation", &Tolerances::branch_separation},
    {"simple-flag", &Tolerances::simple_flag},
    {"collision-scale", &Tolerances::collision_scale},
    {"matching-ratio", &Tolerances::matching_ratio},
}};

}  // namespace

void Tolerances::set(const std::string& name, double value) {
  for (const auto& e : kEntries) {
    if (name == e.name) {
      this->*(e.field) = value;
      return;
    }
  }
  throw Error(ErrorKind::input, "unknown tolerance name: " + name);
}

std::vector<std::pair<std::string, double>> Tolerances::items() const {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(kEntries.size());
  for (const auto& e : kEntries) out.emplace_back(e.name, this->*(e.field));
  return out;
}

}  // namespace unipoint
