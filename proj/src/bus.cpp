#include "percmon/bus.hpp"

#include <stdexcept>

namespace percmon {

PayloadKind payload_kind(const Payload& payload) {
  if (std::holds_alternative<ObjectListFrame>(payload)) return PayloadKind::ObjectList;
  if (std::holds_alternative<EgoState>(payload)) return PayloadKind::Ego;
  if (std::holds_alternative<ValidationVerdict>(payload)) return PayloadKind::Verdict;
  return PayloadKind::ModeEvent;
}

void Bus::create_topic(const std::string& name, PayloadKind kind) {
  const auto [it, inserted] = topics_.emplace(name, TopicState{kind, {}});
  (void)it;
  if (!inserted) throw std::invalid_argument("topic already exists: " + name);
}

Bus::SubscriptionId Bus::subscribe(const std::string& topic, Handler handler) {
  auto it = topics_.find(topic);
  if (it == topics_.end()) throw std::invalid_argument("unknown topic: " + topic);
  const SubscriptionId id = next_id_++;
  it->second.subscribers.push_back({id, std::move(handler)});
  return id;
}

void Bus::unsubscribe(SubscriptionId id) {
  for (auto& [name, state] : topics_) {
    (void)name;
    auto& subs = state.subscribers;
    for (auto it = subs.begin(); it != subs.end(); ++it) {
      if (it->id == id) {
        subs.erase(it);
        return;
      }
    }
  }
}

std::size_t Bus::publish(const std::string& topic, const Payload& payload, Timestamp at) {
  auto it = topics_.find(topic);
  if (it == topics_.end()) throw std::invalid_argument("unknown topic: " + topic);
  if (payload_kind(payload) != it->second.kind)
    throw std::invalid_argument("payload kind does not match topic: " + topic);
  // Snapshot so handlers that subscribe/unsubscribe mid-delivery see a stable run.
  const std::vector<Subscriber> subscribers = it->second.subscribers;
  for (const auto& sub : subscribers) sub.handler(payload, at);
  return subscribers.size();
}

}  // namespace percmon
