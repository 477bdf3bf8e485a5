// Copyright 2026 The ergosum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergosum/theta_spec.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ergosum {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Integer parse_int(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("ThetaSpec: bad integer '" + s + "'");
  return v;
}

}  // namespace

ThetaSpec::ThetaSpec(Integer a0, std::vector<Integer> head, TailRule tail,
                     std::string label)
    : a0_(std::move(a0)),
      head_(std::move(head)),
      tail_(std::move(tail)),
      label_(std::move(label)) {
  for (const Integer& a : head_)
    if (a < 1) throw std::invalid_argument("ThetaSpec: head quotient < 1");
  if (tail_.kind == TailKind::Constant && tail_.constant < 1)
    throw std::invalid_argument("ThetaSpec: constant tail quotient < 1");
  if (tail_.kind == TailKind::Periodic) {
    if (tail_.period.empty())
      throw std::invalid_argument("ThetaSpec: empty periodic tail");
    for (const Integer& a : tail_.period)
      if (a < 1) throw std::invalid_argument("ThetaSpec: periodic quotient < 1");
  }
  if (tail_.kind == TailKind::Formula && tail_.formula != "nuQprev" &&
      tail_.formula != "nuQprev2")
    throw std::invalid_argument("ThetaSpec: unknown formula '" + tail_.formula +
                                "'");
  // seeds P_{-1}=1, Q_{-1}=0, P_0=a_0, Q_0=1
  ps_ = {Integer(1), a0_};
  qs_ = {Integer(0), Integer(1)};
}

Integer ThetaSpec::gen_quotient_locked(long nu) const {
  // nu >= 1 is the quotient index being generated; all smaller ones exist.
  size_t h = head_.size();
  if ((size_t)nu <= h) return head_[nu - 1];
  switch (tail_.kind) {
    case TailKind::None:
      throw SpecExhausted(nu);
    case TailKind::Constant:
      return tail_.constant;
    case TailKind::Periodic:
      return tail_.period[((size_t)nu - h - 1) % tail_.period.size()];
    case TailKind::Formula: {
      // qs_[i] = Q_{i-1}; Q_{nu-2} = qs_[nu-1], available by induction.
      const Integer& qprev2 = qs_[nu - 1];
      Integer v;
      if (tail_.formula == "nuQprev")
        v = Integer(nu - 1) * qprev2;
      else
        v = Integer(nu - 1) * qprev2 * qprev2;
      if (v < 1) v = 1;
      return v;
    }
  }
  throw std::logic_error("ThetaSpec: unreachable tail kind");
}

void ThetaSpec::ensure_locked(long nu) const {
  while ((long)a_.size() < nu) {
    long idx = (long)a_.size() + 1;
    Integer a = gen_quotient_locked(idx);
    a_.push_back(a);
    // pull the recurrence forward so formula tails can read Q values
    ps_.push_back(a * ps_[idx] + ps_[idx - 1]);
    qs_.push_back(a * qs_[idx] + qs_[idx - 1]);
  }
}

Integer ThetaSpec::quotient(long nu) const {
  if (nu < 0) throw std::invalid_argument("quotient: nu < 0");
  if (nu == 0) return a0_;
  std::lock_guard<std::mutex> lock(mu_);
  ensure_locked(nu);
  return a_[nu - 1];
}

Convergent ThetaSpec::convergent(long nu) const {
  if (nu < -1) throw std::invalid_argument("convergent: nu < -1");
  std::lock_guard<std::mutex> lock(mu_);
  ensure_locked(nu);
  return Convergent{nu, ps_[nu + 1], qs_[nu + 1]};
}

long ThetaSpec::level_with_Q_at_most(const Integer& bound) const {
  if (bound < 1) throw std::invalid_argument("level_with_Q_at_most: bound < 1");
  std::lock_guard<std::mutex> lock(mu_);
  long nu = 0;
  for (;;) {
    ensure_locked(nu + 1);
    if (qs_[nu + 2] > bound) return nu;
    ++nu;
  }
}

std::string ThetaSpec::to_text() const {
  std::ostringstream os;
  os << "label=" << label_ << "\n";
  os << "a0=" << a0_.get_str() << "\n";
  os << "head=";
  for (size_t i = 0; i < head_.size(); ++i)
    os << (i ? "," : "") << head_[i].get_str();
  os << "\n";
  os << "tail=";
  switch (tail_.kind) {
    case TailKind::None:
      os << "none";
      break;
    case TailKind::Constant:
      os << "constant:" << tail_.constant.get_str();
      break;
    case TailKind::Periodic: {
      os << "periodic:";
      for (size_t i = 0; i < tail_.period.size(); ++i)
        os << (i ? "," : "") << tail_.period[i].get_str();
      break;
    }
    case TailKind::Formula:
      os << "formula:" << tail_.formula;
      break;
  }
  os << "\n";
  return os.str();
}

ThetaSpec ThetaSpec::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::map<std::string, std::string> kv;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("ThetaSpec: bad line '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (!kv.count("a0") || !kv.count("tail"))
    throw std::invalid_argument("ThetaSpec: missing a0= or tail=");
  Integer a0 = parse_int(kv["a0"]);
  std::vector<Integer> head;
  if (kv.count("head") && !kv["head"].empty())
    for (const std::string& t : split(kv["head"], ','))
      head.push_back(parse_int(t));
  TailRule tail;
  const std::string& ts = kv["tail"];
  if (ts == "none") {
    tail.kind = TailKind::None;
  } else if (ts.rfind("constant:", 0) == 0) {
    tail.kind = TailKind::Constant;
    tail.constant = parse_int(ts.substr(9));
  } else if (ts.rfind("periodic:", 0) == 0) {
    tail.kind = TailKind::Periodic;
    for (const std::string& t : split(ts.substr(9), ','))
      tail.period.push_back(parse_int(t));
  } else if (ts.rfind("formula:", 0) == 0) {
    tail.kind = TailKind::Formula;
    tail.formula = ts.substr(8);
  } else {
    throw std::invalid_argument("ThetaSpec: bad tail '" + ts + "'");
  }
  return ThetaSpec(a0, std::move(head), std::move(tail),
                   kv.count("label") ? kv["label"] : "");
}

const ThetaSpec& ThetaSpec::builtin(const std::string& name) {
  static const std::map<std::string, ThetaSpec>* specs = [] {
    auto* m = new std::map<std::string, ThetaSpec>;
    m->emplace("GOLDEN",
               ThetaSpec(Integer(0), {},
                         TailRule{TailKind::Constant, Integer(1), {}, ""},
                         "GOLDEN"));
    m->emplace("SQRT2",
               ThetaSpec(Integer(0), {},
                         TailRule{TailKind::Constant, Integer(2), {}, ""},
                         "SQRT2"));
    m->emplace("TICHY-SLOW",
               ThetaSpec(Integer(0), {Integer(1), Integer(1)},
                         TailRule{TailKind::Formula, Integer(0), {}, "nuQprev"},
                         "TICHY-SLOW"));
    m->emplace("TICHY-FAST",
               ThetaSpec(Integer(0), {Integer(1), Integer(1)},
                         TailRule{TailKind::Formula, Integer(0), {}, "nuQprev2"},
                         "TICHY-FAST"));
    return m;
  }();
  auto it = specs->find(name);
  if (it == specs->end())
    throw std::invalid_argument("unknown builtin theta spec '" + name + "'");
  return it->second;
}

std::vector<std::string> ThetaSpec::builtin_names() {
  return {"GOLDEN", "SQRT2", "TICHY-SLOW", "TICHY-FAST"};
}

ThetaSpec ThetaSpec::resolve(const std::string& name_or_path) {
  for (const std::string& n : builtin_names())
    if (n == name_or_path) {
      const ThetaSpec& b = builtin(n);
      return ThetaSpec(b.a0(), b.head(), b.tail(), b.label());
    }
  std::ifstream f(name_or_path);
  if (!f)
    throw std::invalid_argument("theta spec '" + name_or_path +
                                "' is neither a builtin nor a readable file");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

}  // namespace ergosum
