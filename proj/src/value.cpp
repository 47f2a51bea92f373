#include "cvx/value.hpp"

#include <algorithm>
#include <sstream>

#include "cvx/errors.hpp"

namespace cvx {

Interval interval_make(const Rat& lo, const Rat& hi, bool lo_closed,
                       bool hi_closed) {
  if (lo > hi) throw ValidationError("interval with lo > hi");
  if (lo == hi && !(lo_closed && hi_closed)) {
    throw ValidationError("degenerate interval must be closed");
  }
  return Interval{lo, hi, lo_closed, hi_closed};
}

int interval_cmp(const Interval& a, const Interval& b) {
  if (int c = Rat::cmp(a.lo, b.lo)) return c;
  if (int c = Rat::cmp(a.hi, b.hi)) return c;
  if (a.lo_closed != b.lo_closed) return a.lo_closed ? -1 : 1;
  if (a.hi_closed != b.hi_closed) return a.hi_closed ? -1 : 1;
  return 0;
}

namespace {

template <typename T>
Value wrap(T data) {
  struct Access : Value {
    explicit Access(std::shared_ptr<const detail::ValueNode> node)
        : Value(std::move(node)) {}
  };
  auto node = std::make_shared<detail::ValueNode>();
  node->data = std::move(data);
  return Access(std::move(node));
}

template <typename Seq, typename Cmp>
int cmp_seq(const Seq& a, const Seq& b, Cmp cmp) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = cmp(a[i], b[i])) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

Value::Value() : Value(Value::token(std::string())) {}

Value Value::token(std::string name) { return wrap(std::move(name)); }
Value Value::scalar(Rat r) { return wrap(std::move(r)); }
Value Value::vec(std::vector<Rat> coords) { return wrap(std::move(coords)); }
Value Value::interval(Interval iv) {
  interval_make(iv.lo, iv.hi, iv.lo_closed, iv.hi_closed);
  return wrap(std::move(iv));
}
Value Value::dist(Dist d) {
  if (d.support.empty()) throw DomainError("distribution with empty support");
  return wrap(std::move(d));
}

Value Value::set(std::vector<Value> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  detail::SetRep rep;
  rep.members = std::move(members);
  return wrap(std::move(rep));
}

Value Value::tagged(std::string tag, std::vector<Value> parts) {
  detail::TaggedRep rep;
  rep.tag = std::move(tag);
  rep.parts = std::move(parts);
  return wrap(std::move(rep));
}

Value::Kind Value::kind() const {
  return static_cast<Kind>(node_->data.index());
}

namespace {
[[noreturn]] void wrong_kind(const char* want) {
  throw DomainError(std::string("value is not a ") + want);
}
}  // namespace

const std::string& Value::token_name() const {
  if (auto* p = std::get_if<std::string>(&node_->data)) return *p;
  wrong_kind("token");
}
const Rat& Value::scalar_value() const {
  if (auto* p = std::get_if<Rat>(&node_->data)) return *p;
  wrong_kind("scalar");
}
const std::vector<Rat>& Value::vec_coords() const {
  if (auto* p = std::get_if<std::vector<Rat>>(&node_->data)) return *p;
  wrong_kind("vector");
}
const Interval& Value::interval_value() const {
  if (auto* p = std::get_if<Interval>(&node_->data)) return *p;
  wrong_kind("interval");
}
const Dist& Value::dist_value() const {
  if (auto* p = std::get_if<Dist>(&node_->data)) return *p;
  wrong_kind("distribution");
}
const std::vector<Value>& Value::set_members() const {
  if (auto* p = std::get_if<detail::SetRep>(&node_->data)) return p->members;
  wrong_kind("set");
}
const std::string& Value::tag() const {
  if (auto* p = std::get_if<detail::TaggedRep>(&node_->data)) return p->tag;
  wrong_kind("tagged value");
}
const std::vector<Value>& Value::tagged_parts() const {
  if (auto* p = std::get_if<detail::TaggedRep>(&node_->data)) return p->parts;
  wrong_kind("tagged value");
}

int Value::cmp(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return 0;
  const auto& da = a.node_->data;
  const auto& db = b.node_->data;
  if (da.index() != db.index()) return da.index() < db.index() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Token:
      return std::get<std::string>(da).compare(std::get<std::string>(db));
    case Kind::Scalar:
      return Rat::cmp(std::get<Rat>(da), std::get<Rat>(db));
    case Kind::Vec:
      return cmp_seq(std::get<std::vector<Rat>>(da),
                     std::get<std::vector<Rat>>(db), Rat::cmp);
    case Kind::Interval:
      return interval_cmp(std::get<Interval>(da), std::get<Interval>(db));
    case Kind::Dist:
      return cmp_seq(std::get<Dist>(da).support, std::get<Dist>(db).support,
                     [](const auto& p, const auto& q) {
                       if (int c = cmp(p.first, q.first)) return c;
                       return Rat::cmp(p.second.value(), q.second.value());
                     });
    case Kind::Set:
      return cmp_seq(std::get<detail::SetRep>(da).members,
                     std::get<detail::SetRep>(db).members, cmp);
    case Kind::Tagged: {
      const auto& ta = std::get<detail::TaggedRep>(da);
      const auto& tb = std::get<detail::TaggedRep>(db);
      if (int c = ta.tag.compare(tb.tag)) return c;
      return cmp_seq(ta.parts, tb.parts, cmp);
    }
  }
  return 0;
}

std::string Value::str() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Token:
      os << token_name();
      break;
    case Kind::Scalar:
      os << scalar_value();
      break;
    case Kind::Vec: {
      os << '(';
      const auto& cs = vec_coords();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ", ";
        os << cs[i];
      }
      os << ')';
      break;
    }
    case Kind::Interval: {
      const auto& iv = interval_value();
      os << (iv.lo_closed ? '[' : '(') << iv.lo << ", " << iv.hi
         << (iv.hi_closed ? ']' : ')');
      break;
    }
    case Kind::Dist: {
      os << '{';
      const auto& sup = dist_value().support;
      for (std::size_t i = 0; i < sup.size(); ++i) {
        if (i) os << ", ";
        os << sup[i].first.str() << ':' << sup[i].second.str();
      }
      os << '}';
      break;
    }
    case Kind::Set: {
      os << '{';
      const auto& ms = set_members();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) os << ", ";
        os << ms[i].str();
      }
      os << '}';
      break;
    }
    case Kind::Tagged: {
      os << tag();
      const auto& ps = tagged_parts();
      if (!ps.empty()) {
        os << '<';
        for (std::size_t i = 0; i < ps.size(); ++i) {
          if (i) os << ", ";
          os << ps[i].str();
        }
        os << '>';
      }
      break;
    }
  }
  return os.str();
}

}  // namespace cvx
