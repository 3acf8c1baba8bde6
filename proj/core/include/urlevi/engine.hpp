#pragma once

#include "urlevi/affine.hpp"
#include "urlevi/catalog.hpp"
#include "urlevi/root_system.hpp"
#include "urlevi/subsystems.hpp"
#include "urlevi/weyl.hpp"

#include <memory>
#include <mutex>

namespace urlevi {

// Everything derived from a GroupSpec. Not copyable: members point at each other.
class Engine {
 public:
  explicit Engine(GroupSpec spec, int radius = 4);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const GroupSpec& spec() const { return spec_; }
  const RootSystem& rs() const { return rs_; }
  const WeylGroup& W() const { return *W_; }
  const FrobeniusAction& fr() const { return fr_; }
  int radius() const { return radius_; }

  const Apartment& apartment() const;
  const SubsystemTable& subsystems() const;
  // ids of Phi_theta, theta in Theta
  const Vec& theta_ids() const;
  // ids of Phi_Xi, Xi in Theta~ at the spec's characteristic
  const Vec& tilde_ids() const;

 private:
  void build_subsystems() const;

  GroupSpec spec_;
  RootSystem rs_;
  std::unique_ptr<WeylGroup> W_;
  FrobeniusAction fr_;
  int radius_;

  mutable std::once_flag apt_once_, sub_once_;
  mutable std::unique_ptr<Apartment> apt_;
  mutable std::unique_ptr<SubsystemTable> table_;
  mutable Vec theta_ids_, tilde_ids_;
};

// a config file when the string looks like a path, a preset otherwise
GroupSpec resolve_group(const std::string& group);
// residue_char < 0 keeps the spec's own
std::unique_ptr<Engine> make_engine(const std::string& group, int residue_char = -1, int radius = 4);

}  // namespace urlevi
