#include "rosetree/node_identity.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>

namespace rosetree {

SourceToken mint_source_token() noexcept {
  static std::atomic<std::uint64_t> next{1};
  return SourceToken{next.fetch_add(1, std::memory_order_relaxed)};
}

namespace {

void check_source(const std::optional<SourceToken>& mine, SourceToken theirs) {
  if (mine && !(*mine == theirs)) {
    throw SourceMismatch("node belongs to a different numbered tree");
  }
}

}  // namespace

NodeSet NodeSet::insert(SourceToken source, NodeId id) const {
  check_source(source_, source);
  NodeSet out = *this;
  out.source_ = source;
  auto pos = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
  if (pos == out.ids_.end() || *pos != id) out.ids_.insert(pos, id);
  return out;
}

NodeSet NodeSet::of(SourceToken source, std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  NodeSet out;
  out.source_ = source;
  out.ids_ = std::move(ids);
  return out;
}

bool NodeSet::contains(NodeId id) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  check_source(a.source_, *b.source_);
  NodeSet out;
  out.source_ = a.source_;
  out.ids_.reserve(a.ids_.size() + b.ids_.size());
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

}  // namespace rosetree
