#include "simlab/core/model.hpp"

#include <set>

#include "simlab/core/errors.hpp"

namespace simlab {

Model::Model(std::string name, Domain domain, std::vector<PartialMap> members,
             Enumerator enumerator)
    : name_(std::move(name)),
      domain_(domain),
      members_(std::move(members)),
      enumerator_(std::move(enumerator)) {
  std::set<std::string, std::less<>> seen;
  for (const auto& m : members_) {
    if (!m.valid()) throw ValidationError("model " + name_ + " has an unset member");
    if (m.domain() != domain_) {
      throw ValidationError("model " + name_ + " is over " + std::string(to_string(domain_)) +
                            " but member " + m.name() + " is over " +
                            std::string(to_string(m.domain())));
    }
    if (!seen.insert(m.name()).second) {
      throw ValidationError("model " + name_ + " lists member " + m.name() + " twice");
    }
  }
}

std::optional<PartialMap> Model::enumerate(std::size_t index) const {
  if (!enumerator_) return std::nullopt;
  auto m = enumerator_(index);
  if (m && m->domain() != domain_) {
    throw ValidationError("enumerator of model " + name_ + " produced a map over the wrong domain");
  }
  return m;
}

const PartialMap* Model::find(const std::string& member_name) const {
  for (const auto& m : members_) {
    if (m.name() == member_name) return &m;
  }
  return nullptr;
}

std::vector<std::string> Model::member_names() const {
  std::vector<std::string> names;
  names.reserve(members_.size());
  for (const auto& m : members_) names.push_back(m.name());
  return names;
}

bool is_submodel_by_name(const Model& sub, const Model& super) {
  if (sub.domain() != super.domain()) return false;
  for (const auto& m : sub.members()) {
    if (!super.contains(m.name())) return false;
  }
  return true;
}

bool is_strict_submodel_by_name(const Model& sub, const Model& super) {
  return is_submodel_by_name(sub, super) && sub.size() < super.size();
}

namespace {

Model map_model(const Model& m, std::string name, Domain domain,
                std::function<PartialMap(const PartialMap&)> f) {
  std::vector<PartialMap> members;
  members.reserve(m.size());
  for (const auto& member : m.members()) members.push_back(f(member).renamed(member.name()));
  Model::Enumerator en;
  if (m.has_enumerator()) {
    en = [m, f](std::size_t k) -> std::optional<PartialMap> {
      auto base = m.enumerate(k);
      if (!base) return std::nullopt;
      return f(*base).renamed(base->name());
    };
  }
  return Model(std::move(name), domain, std::move(members), std::move(en));
}

}  // namespace

Model pushforward(const Encoding& e, const Model& m, std::string name) {
  return map_model(m, std::move(name), e.target(),
                   [e](const PartialMap& g) { return pushforward(e, g); });
}

Model pullback(const Encoding& e, const Model& m, std::string name) {
  return map_model(m, std::move(name), e.source(),
                   [e](const PartialMap& f) { return pullback(e, f); });
}

}  // namespace simlab
