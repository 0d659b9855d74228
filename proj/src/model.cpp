#include "hyfac/model.hpp"

#include <algorithm>
#include <sstream>

namespace hyfac {

namespace {

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw DomainError("parameters overflow 64-bit counts");
  return out;
}

} // namespace

Params::Params(Count lambda, Count m, Count n, std::vector<Count> r)
    : lambda_(lambda), m_(m), n_(n), r_(std::move(r)) {
  if (lambda_ < 1) throw DomainError("lambda must be positive");
  if (m_ < 1) throw DomainError("m must be positive");
  if (n_ < 2) throw DomainError("n must be at least 2");
  if (r_.empty()) throw DomainError("r must have at least one entry");
  for (Count ri : r_)
    if (ri < 1) throw DomainError("every r_i must be positive");
  if (m_ > (Count{1} << 30) || n_ > (Count{1} << 30))
    throw DomainError("parameters overflow 64-bit counts");

  // Largest count the library ever forms: total degree times m*n.
  total_degree_ = checked_mul(checked_mul(3, lambda_),
                              checked_mul(n_ - 1, choose2(m_)));
  checked_mul(total_degree_, checked_mul(m_, n_));
  checked_mul(checked_mul(2 * lambda_, m_), checked_mul(choose2(n_), choose2(m_)));
}

Count Params::total_edges() const {
  return 2 * lambda_ * m_ * choose2(n_) * choose2(m_);
}

bool Params::uniform() const {
  return std::all_of(r_.begin(), r_.end(), [&](Count x) { return x == r_.front(); });
}

std::string to_string(VertexId v) {
  std::ostringstream os;
  os << "x_" << v.part + 1 << "_" << v.index + 1;
  return os.str();
}

Triple canonicalize(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

bool is_canonical(const Triple& t) { return std::is_sorted(t.begin(), t.end()); }

bool is_n_partite(const Triple& t) {
  const Triple s = canonicalize(t);
  if (s[0] == s[1] && s[1] == s[2]) return false;
  // Sorted by part first, so the doubled part is either the first two or the
  // last two entries.
  const bool low = s[0].part == s[1].part && s[1].part != s[2].part;
  const bool high = s[0].part != s[1].part && s[1].part == s[2].part;
  return low || high;
}

int occurrences(const Triple& t, VertexId v) {
  return static_cast<int>(std::count(t.begin(), t.end(), v));
}

Design::Design(Params params) : params_(std::move(params)) {}

Count Design::g(VertexId v) const {
  auto it = position_.find(v);
  if (it == position_.end()) throw DomainError("unknown vertex " + to_string(v));
  return vertices_[it->second].g;
}

std::vector<VertexId> Design::part_members(int part) const {
  std::vector<VertexId> out;
  for (const auto& [id, pos] : position_)
    if (id.part == part) out.push_back(id);
  return out;
}

int Design::next_index(int part) const {
  int next = 0;
  for (const auto& [id, pos] : position_)
    if (id.part == part) next = std::max(next, id.index + 1);
  return next;
}

void Design::add_vertex(VertexId v, Count g) {
  if (v.part < 0 || v.part >= params_.n())
    throw DomainError("vertex part out of range: " + to_string(v));
  if (v.index < 0) throw DomainError("negative vertex index");
  if (g < 1) throw DomainError("vertex weight must be positive");
  if (position_.contains(v)) throw DomainError("duplicate vertex " + to_string(v));
  position_.emplace(v, vertices_.size());
  vertices_.push_back({v, g});
}

void Design::set_g(VertexId v, Count g) {
  auto it = position_.find(v);
  if (it == position_.end()) throw DomainError("unknown vertex " + to_string(v));
  if (g < 1) throw DomainError("vertex weight must be positive");
  vertices_[it->second].g = g;
}

void Design::check_edge(const Triple& t, int color) const {
  if (color < 0 || color >= params_.k())
    throw DomainError("edge color out of range");
  for (const auto& v : t)
    if (!has_vertex(v)) throw DomainError("edge uses unknown vertex " + to_string(v));
  if (!is_n_partite(t)) throw DomainError("edge is not n-partite");
}

std::size_t Design::add_edge(Triple t, int color) {
  t = canonicalize(t);
  check_edge(t, color);
  edges_.push_back({t, color, next_edge_id_});
  return next_edge_id_++;
}

void Design::relabel(std::size_t pos, VertexId from, VertexId to, int count) {
  auto& e = edges_.at(pos);
  Triple t = e.vertices;
  for (auto& v : t) {
    if (count == 0) break;
    if (v == from) {
      v = to;
      --count;
    }
  }
  if (count != 0) throw InternalError("relabel: not enough occurrences");
  t = canonicalize(t);
  check_edge(t, e.color);
  e.vertices = t;
}

Count degree(const Design& design, VertexId v, std::optional<int> color) {
  if (!design.has_vertex(v)) throw DomainError("unknown vertex " + to_string(v));
  if (color && (*color < 0 || *color >= design.params().k()))
    throw DomainError("color out of range");
  Count d = 0;
  for (const auto& e : design.edges())
    if (!color || e.color == *color) d += occurrences(e.vertices, v);
  return d;
}

Count multiplicity(const Design& design, const Triple& shape, std::optional<int> color) {
  const Triple key = canonicalize(shape);
  Count c = 0;
  for (const auto& e : design.edges())
    if ((!color || e.color == *color) && e.vertices == key) ++c;
  return c;
}

Count edge_count(const Design& design) {
  return static_cast<Count>(design.edges().size());
}

std::map<Triple, Count> multiplicity_table(const Design& design, std::optional<int> color) {
  std::map<Triple, Count> table;
  for (const auto& e : design.edges())
    if (!color || e.color == *color) ++table[e.vertices];
  return table;
}

} // namespace hyfac
