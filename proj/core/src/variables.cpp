#include "fano/variables.hpp"

#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>

#include "fano/errors.hpp"

namespace fano {
namespace {

class Registry {
 public:
  Registry() {
    for (int i = 0; i <= 9; ++i) intern("Z_" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) intern("X_" + std::to_string(i));
    for (int i = 0; i <= 9; ++i) intern("x_" + std::to_string(i));
  }

  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  std::string_view name(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    if (id >= names_.size()) throw Error(ErrorCode::InvalidInput, "unknown variable id");
    return names_[id];
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;  // deque keeps views stable
  std::unordered_map<std::string, std::uint32_t> ids_;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Var::Var(std::string_view name) : id_(registry().intern(name)) {}

std::string_view Var::name() const { return registry().name(id_); }

Var homogeneous(int index) {
  if (index < 0 || index > 9) throw Error(ErrorCode::InvalidInput, "homogeneous index out of range");
  return Var::from_id(static_cast<std::uint32_t>(index));
}

Var cubic_affine(int index) {
  if (index < 1 || index > 4) throw Error(ErrorCode::InvalidInput, "cubic chart index out of range");
  return Var::from_id(static_cast<std::uint32_t>(10 + index - 1));
}

Var quintic_affine(int index) {
  if (index < 0 || index > 9) throw Error(ErrorCode::InvalidInput, "quintic chart index out of range");
  return Var::from_id(static_cast<std::uint32_t>(14 + index));
}

std::vector<Var> homogeneous_range(int count) {
  std::vector<Var> out;
  for (int i = 0; i < count; ++i) out.push_back(homogeneous(i));
  return out;
}

}  // namespace fano
