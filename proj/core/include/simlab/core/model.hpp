#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simlab/core/encoding.hpp"
#include "simlab/core/partial_map.hpp"

namespace simlab {

// A named finite sample of a model of computation, optionally backed by an
// enumerator that yields further members of the (usually infinite) model
// by index. Enumerated members may repeat listed ones; consumers skip
// duplicates by name.
class Model {
 public:
  using Enumerator = std::function<std::optional<PartialMap>(std::size_t)>;

  Model(std::string name, Domain domain, std::vector<PartialMap> members,
        Enumerator enumerator = {});

  const std::string& name() const noexcept { return name_; }
  Domain domain() const noexcept { return domain_; }
  const std::vector<PartialMap>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  bool has_enumerator() const noexcept { return static_cast<bool>(enumerator_); }
  std::optional<PartialMap> enumerate(std::size_t index) const;

  const PartialMap* find(const std::string& member_name) const;
  bool contains(const std::string& member_name) const { return find(member_name) != nullptr; }

  std::vector<std::string> member_names() const;

 private:
  std::string name_;
  Domain domain_;
  std::vector<PartialMap> members_;
  Enumerator enumerator_;
};

// Member-name containment. Models are compared by their listed samples.
bool is_submodel_by_name(const Model& sub, const Model& super);
bool is_strict_submodel_by_name(const Model& sub, const Model& super);

// Set extensions of pushforward and pullback. The enumerator, if any, is
// mapped along.
Model pushforward(const Encoding& e, const Model& m, std::string name);
Model pullback(const Encoding& e, const Model& m, std::string name);

}  // namespace simlab
