#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "percmon/mode_control.hpp"
#include "percmon/types.hpp"
#include "percmon/validator.hpp"

namespace percmon {

// Minimal in-process publish-subscribe bus with typed topics. Delivery is
// synchronous, in subscription order, on the caller's context — the simulation
// clock drives everything, so determinism and replayability beat throughput.
// One event at a time; no cross-context delivery.

using Payload = std::variant<ObjectListFrame, EgoState, ValidationVerdict, ModeTransition>;

enum class PayloadKind { ObjectList, Ego, Verdict, ModeEvent };

PayloadKind payload_kind(const Payload& payload);

class Bus {
 public:
  using Handler = std::function<void(const Payload&, Timestamp)>;
  using SubscriptionId = std::uint64_t;

  // Topic names are unique; each topic carries exactly one payload kind.
  // Throws std::invalid_argument on a duplicate name.
  void create_topic(const std::string& name, PayloadKind kind);

  bool has_topic(const std::string& name) const { return topics_.count(name) > 0; }

  // Handler runs synchronously on every subsequent publish until unsubscribed.
  // Throws std::invalid_argument for an unknown topic.
  SubscriptionId subscribe(const std::string& topic, Handler handler);

  void unsubscribe(SubscriptionId id);

  // Delivers to all current subscribers in subscription order; returns the
  // delivery count. Throws std::invalid_argument for an unknown topic or a
  // payload kind mismatch.
  std::size_t publish(const std::string& topic, const Payload& payload, Timestamp at);

 private:
  struct Subscriber {
    SubscriptionId id;
    Handler handler;
  };
  struct TopicState {
    PayloadKind kind;
    std::vector<Subscriber> subscribers;
  };

  std::map<std::string, TopicState> topics_;
  SubscriptionId next_id_ = 1;
};

}  // namespace percmon
