/*
 * Copyright 2026 The wsfd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wsfd/errors.hpp"

namespace wsfd {

// Deterministic model of a 2D mesh of router+PE pairs. Every router has
// five full-duplex links (East, West, North, South and the ramp to its
// local PE); each link moves at most one 32-bit packet per direction per
// cycle. Packets carry a color; per color a router is configured with the
// accepted input links and the output link set, and ordering within a
// color is preserved end to end. Routing is updated at run time by command
// packets that travel the same way data does.

enum class LinkDirection : std::uint8_t { East = 0, West = 1, North = 2, South = 3, Ramp = 4 };
inline constexpr int kLinkCount = 5;

const char* to_string(LinkDirection d);

constexpr std::uint8_t link_bit(LinkDirection d) {
  return static_cast<std::uint8_t>(1u << static_cast<unsigned>(d));
}
constexpr bool has_link(std::uint8_t mask, LinkDirection d) { return (mask & link_bit(d)) != 0; }

/// Channel id; routing and ordering are per color.
struct Color {
  std::uint8_t id = 0;
};
inline bool operator==(Color a, Color b) { return a.id == b.id; }

enum class PacketKind : std::uint8_t { Data = 0, Command = 1 };

/// One 32-bit word on the wire, tagged with its color and kind.
struct Packet {
  std::uint32_t payload = 0;
  Color color{};
  PacketKind kind = PacketKind::Data;
};

/// The three router configurations of a broadcast window
/// (configuration 0 = Root, 1 = Middle, 2 = Last).
enum class BroadcastRole : std::uint8_t { Root = 0, Middle = 1, Last = 2 };

const char* to_string(BroadcastRole r);

/// The four broadcast flow directions.
enum class Cardinal : std::uint8_t { East = 0, West = 1, North = 2, South = 3 };

const char* to_string(Cardinal c);
LinkDirection downstream_link(Cardinal c);
LinkDirection upstream_link(Cardinal c);

// ---------------------------------------------------------------------------
// Shift commands
// ---------------------------------------------------------------------------

/// Routing update carried by a Command packet. `hop` counts routers visited
/// (0 = the issuing Root); `seq` is the 1-based shift number the command
/// performs, used to reject double application.
struct ShiftCommand {
  Cardinal direction = Cardinal::East;
  std::uint8_t hop = 0;
  std::uint8_t seq = 1;
};

std::uint32_t pack_shift_command(const ShiftCommand& c);
ShiftCommand unpack_shift_command(std::uint32_t payload);

/// Role a router assumes after a shift reaches it at the given hop:
/// hop 0 -> Last (the old Root), hop 1 -> Root, hops 2..4 -> Middle.
BroadcastRole role_after_shift(int hop);

// ---------------------------------------------------------------------------
// Router configuration
// ---------------------------------------------------------------------------

struct ColorRoute {
  std::uint8_t accept_mask = 0;
  std::uint8_t output_mask = 0;
  std::uint8_t shifts_applied = 0;
  bool configured = false;
};

class RouterConfig {
 public:
  RouterConfig() = default;
  explicit RouterConfig(int color_budget);

  int color_budget() const { return static_cast<int>(routes_.size()); }

  /// Accepted-color routes must have a non-empty output set.
  void set_route(Color c, std::uint8_t accept_mask, std::uint8_t output_mask);
  /// Install the window-role route for a broadcast direction.
  void set_role(Color c, BroadcastRole role, Cardinal dir);
  void clear(Color c);

  bool configured(Color c) const;
  const ColorRoute& route_for(Color c) const;
  ColorRoute& route_for_mutable(Color c);

 private:
  void check_color(Color c) const;
  std::vector<ColorRoute> routes_{std::vector<ColorRoute>(24)};
};

/// Accept/output masks for a window role in a broadcast direction.
ColorRoute role_route(BroadcastRole role, Cardinal dir);

/// Output set for a packet arriving on `arrived_on`. Pure; throws
/// fabric_error when the color is not accepted on that link.
std::uint8_t route(const RouterConfig& cfg, const Packet& packet, LinkDirection arrived_on);

/// Apply a shift command to a configuration and return the result. The PE
/// compute state is untouched. Throws fabric_error for malformed commands
/// and when the same shift is applied twice.
RouterConfig apply_command(const RouterConfig& cfg, const Packet& cmd);

// ---------------------------------------------------------------------------
// Fabric
// ---------------------------------------------------------------------------

struct TraceEvent {
  std::uint64_t cycle = 0;
  int x = 0;
  int y = 0;
  LinkDirection link = LinkDirection::Ramp;
  Color color{};
  PacketKind kind = PacketKind::Data;
};

using TraceFn = std::function<void(const TraceEvent&)>;

/// Words moved, per link of one router. Fabric counters are indexed by the
/// outgoing direction; the ramp is split by flow direction and kind.
struct LinkCounters {
  std::array<std::uint64_t, 4> fabric_out{};  // indexed by LinkDirection E,W,N,S
  std::uint64_t ramp_in_data = 0;             // PE -> router injections
  std::uint64_t ramp_in_cmd = 0;
  std::uint64_t ramp_out_data = 0;            // router -> PE deliveries
  std::uint64_t dropped = 0;                  // words sent past the fabric edge
};

/// Flow-conservation bookkeeping per color. A multicast fan-out of n
/// copies counts n-1 duplications, so at quiescence
/// injected + duplicated == consumed + dropped.
struct PatternCounters {
  std::uint64_t injected = 0;
  std::uint64_t duplicated = 0;
  std::uint64_t consumed = 0;
  std::uint64_t dropped = 0;
};

/// Colors of one broadcast pattern: data words and shift commands share
/// `data` (ordering between them matters); `ctrl` is reserved against the
/// color budget, two colors per pattern.
struct BroadcastColorPlan {
  Color data{};
  Color ctrl{};
};

BroadcastColorPlan default_color_plan(Cardinal dir);
std::array<BroadcastColorPlan, 4> default_color_plans();

/// Blocks delivered to every PE by one broadcast pattern: five blocks of
/// `block_len` words, ordered farthest source first, self last. Slots whose
/// source lies outside the grid are zero-filled.
class DeliveryMap {
 public:
  DeliveryMap() = default;

  int width() const { return width_; }
  int height() const { return height_; }
  int block_len() const { return block_len_; }
  std::uint64_t cycles() const { return cycles_; }

  std::span<const std::uint32_t> block(int x, int y, int slot) const;
  /// False for zero-filled boundary slots.
  bool delivered(int x, int y, int slot) const;
  std::span<const std::uint32_t> words() const { return words_; }

 private:
  friend class FabricGrid;
  void reset(int width, int height, int block_len);

  int width_ = 0, height_ = 0, block_len_ = 0;
  std::uint64_t cycles_ = 0;
  std::vector<std::uint32_t> words_;
  std::vector<std::uint8_t> delivered_;
};

class FabricGrid {
 public:
  struct Options {
    int queue_capacity = 8;  // words per link input buffer
    int color_budget = 24;
  };

  FabricGrid(int width, int height, Options options = {});

  int width() const { return width_; }
  int height() const { return height_; }
  const Options& options() const { return options_; }
  std::uint64_t cycle() const { return cycle_; }

  RouterConfig& router(int x, int y);
  const RouterConfig& router(int x, int y) const;

  // --- low-level surface -----------------------------------------------
  /// Queue a packet on the PE side of the ramp; it enters the router when
  /// the ramp buffer has room, one word per cycle.
  void inject(int x, int y, const Packet& p);
  /// Advance one cycle; returns true when any packet moved.
  bool step();
  bool quiescent() const;
  /// Step until quiescent. Throws fabric_error when no packet moves while
  /// some are still pending (deadlock) or max_cycles elapses.
  void run_until_quiescent(std::uint64_t max_cycles);
  /// Packets delivered to the PE at (x,y), in arrival order.
  const std::vector<Packet>& delivered(int x, int y) const;
  void clear_delivered();

  // --- broadcast protocol ----------------------------------------------
  /// One localized broadcast: every PE sends its block of `block_len`
  /// payload words (pe-major layout, width*height*block_len words total)
  /// and receives five blocks from source offsets -4..0 along `dir`.
  void run_broadcast(Cardinal dir, int block_len, std::span<const std::uint32_t> payloads,
                     DeliveryMap& out, const BroadcastColorPlan& plan);
  DeliveryMap run_broadcast(Cardinal dir, int block_len, std::span<const std::uint32_t> payloads);

  /// All four patterns with one payload set. Patterns use disjoint color
  /// pairs and independent links, so the result equals four isolated runs
  /// and the cycle cost is the maximum of the four, not the sum.
  struct ConcurrentResult {
    std::array<DeliveryMap, 4> maps;  // indexed by Cardinal
    std::uint64_t cycles = 0;         // max over the four patterns
  };
  ConcurrentResult concurrent_broadcasts(int block_len, std::span<const std::uint32_t> payloads,
                                         const std::array<BroadcastColorPlan, 4>& plans =
                                             default_color_plans());
  void concurrent_broadcasts(int block_len, std::span<const std::uint32_t> payloads,
                             ConcurrentResult& out,
                             const std::array<BroadcastColorPlan, 4>& plans =
                                 default_color_plans());

  // --- observability -----------------------------------------------------
  const LinkCounters& counters(int x, int y) const;
  const PatternCounters& pattern_counters(Color c) const;
  void reset_counters();
  /// Roles the router at (x,y) held during the latest run_broadcast on that
  /// pattern: initial role followed by each applied shift.
  const std::vector<BroadcastRole>& role_log(int x, int y) const;
  void set_trace(TraceFn fn) { trace_ = std::move(fn); }

 private:
  struct Slot {
    std::uint32_t payload;
    std::uint8_t color;
    std::uint8_t kind;
    std::uint16_t hop;
    std::uint32_t arrival;
  };

  // Fixed-capacity FIFO ring.
  struct Ring {
    std::vector<Slot> buf;
    int head = 0;
    int count = 0;

    bool empty() const { return count == 0; }
    bool full() const { return count == static_cast<int>(buf.size()); }
    const Slot& front() const { return buf[head]; }
    void pop() {
      head = (head + 1) % static_cast<int>(buf.size());
      --count;
    }
    void push(const Slot& s) {
      buf[(head + count) % static_cast<int>(buf.size())] = s;
      ++count;
    }
  };

  struct Node {
    RouterConfig config;
    std::array<Ring, kLinkCount> in;  // indexed by LinkDirection of the input port
    std::deque<Packet> staging;       // PE-side send queue (unbounded)
    std::vector<Packet> delivered;
    std::vector<BroadcastRole> roles;
    LinkCounters counters;
    std::uint8_t nonempty_mask = 0;
  };

  std::size_t node_index(int x, int y) const { return std::size_t(y) * width_ + x; }
  Node& node(int x, int y) { return nodes_[node_index(x, y)]; }
  const Node& node(int x, int y) const { return nodes_[node_index(x, y)]; }
  bool neighbor(int x, int y, LinkDirection out, int& nx, int& ny) const;
  void push_or_overflow(Node& n, LinkDirection port, const Slot& s, int x, int y);
  void deliver(Node& n, int x, int y, const Slot& s);
  void process_command(Node& n, int x, int y, LinkDirection port, std::uint8_t& used_out);
  bool process_data(Node& n, int x, int y, LinkDirection port, std::uint8_t& used_out);
  void check_color_budget(Color c) const;

  int width_;
  int height_;
  Options options_;
  std::uint64_t cycle_ = 0;
  std::uint64_t pending_ = 0;  // staged + queued packets
  std::vector<Node> nodes_;
  std::vector<PatternCounters> pattern_counters_;
  TraceFn trace_;
};

/// Flow coordinate of (x,y) along a broadcast direction: 0 at the upstream
/// edge, increasing downstream.
int flow_coordinate(Cardinal dir, int x, int y, int width, int height);

/// Initial role of a PE in the 5-PE window tiling (shift 0): Root when the
/// flow coordinate is a multiple of 5, Last at offset 4, Middle otherwise.
BroadcastRole initial_role(int flow_coord);

}  // namespace wsfd
