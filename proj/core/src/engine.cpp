#include "urlevi/engine.hpp"

#include <filesystem>

namespace urlevi {

Engine::Engine(GroupSpec spec, int radius)
    : spec_(std::move(spec)), rs_(build_root_system(spec_.cartan_label)), radius_(radius) {
  if (radius < 2) throw Error("search radius must be at least 2");
  if (!spec_.simply_connected) throw Error(spec_.name + ": only simply connected groups are supported");
  W_ = std::make_unique<WeylGroup>(rs_);
  Vec perm = spec_.node_perm;
  if (perm.empty())
    for (int i = 0; i <= rs_.rank; ++i) perm.push_back(i);
  fr_ = make_frobenius(*W_, perm);
  spec_.node_perm = perm;
}

const Apartment& Engine::apartment() const {
  std::call_once(apt_once_, [this] { apt_ = std::make_unique<Apartment>(*W_, fr_, radius_); });
  return *apt_;
}

void Engine::build_subsystems() const {
  table_ = std::make_unique<SubsystemTable>(rs_);
  for (const RootSet& s : parabolic_subsystems(*W_)) {
    const int id = table_->add(s);
    table_->at(id).parabolic = true;
    theta_ids_.push_back(id);
  }
  if (rs_.positive_root_count > 16) return;  // Theta~ only by brute force
  for (const QuasiClosed& q : enumerate_quasi_closed(rs_, spec_.residue_char)) {
    const int id = table_->add(q.members);
    table_->at(id).closed = q.closed;
    table_->at(id).quasi_chars = q.chars;
    tilde_ids_.push_back(id);
  }
}

const SubsystemTable& Engine::subsystems() const {
  std::call_once(sub_once_, [this] { build_subsystems(); });
  return *table_;
}

const Vec& Engine::theta_ids() const {
  subsystems();
  return theta_ids_;
}

const Vec& Engine::tilde_ids() const {
  subsystems();
  if (tilde_ids_.empty()) throw Error("quasi-closed enumeration: rank too large for brute force (" + rs_.label + ")");
  return tilde_ids_;
}

GroupSpec resolve_group(const std::string& group) {
  if (group.find('/') != std::string::npos || group.find(".cfg") != std::string::npos ||
      std::filesystem::exists(group))
    return load_config(group);
  return preset(group);
}

std::unique_ptr<Engine> make_engine(const std::string& group, int residue_char, int radius) {
  GroupSpec spec = resolve_group(group);
  if (residue_char >= 0) spec.residue_char = residue_char;
  return std::make_unique<Engine>(std::move(spec), radius);
}

}  // namespace urlevi
