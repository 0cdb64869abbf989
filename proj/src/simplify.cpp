// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsearch/simplify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <tuple>

namespace qsearch {

namespace {

struct Fragment {
  unsigned target = 0;
  bool fires_on_one = true;
  ControlPattern controls;
  double phi = 0.0;
  bool controlled_conjugation = false;  // X gates carry the controls
  std::size_t first_gate = 0;
  std::size_t gate_count = 0;
  bool rewritten = false;
};

struct Item {
  std::optional<Fragment> fragment;
  std::size_t gate = 0;  // barrier gate index when !fragment
};

bool same_pattern(const std::vector<Control>& a, const std::vector<Control>& b) {
  const auto pa = control_pattern(a);
  const auto pb = control_pattern(b);
  return pa.mask == pb.mask && pa.value == pb.value;
}

std::vector<Item> decompose(const Circuit& circuit) {
  const auto& ops = circuit.ops();
  std::vector<Item> items;
  for (std::size_t i = 0; i < ops.size();) {
    const GateOp& op = ops[i];
    if (op.kind.type == GateType::Phase) {
      items.push_back({Fragment{op.target, true, control_pattern(op.controls), op.kind.angle,
                                false, i, 1, false},
                       i});
      ++i;
      continue;
    }
    if (op.kind.type == GateType::X && i + 2 < ops.size()) {
      const GateOp& mid = ops[i + 1];
      const GateOp& last = ops[i + 2];
      if (mid.kind.type == GateType::Phase && mid.target == op.target && last == op &&
          (op.controls.empty() || same_pattern(op.controls, mid.controls))) {
        items.push_back({Fragment{op.target, false, control_pattern(mid.controls),
                                  mid.kind.angle, !op.controls.empty(), i, 3, false},
                         i});
        i += 3;
        continue;
      }
    }
    items.push_back({std::nullopt, i});
    ++i;
  }
  return items;
}

std::vector<Control> controls_from_pattern(const ControlPattern& p) {
  std::vector<Control> out;
  for (int q = 63; q >= 0; --q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (p.mask & bit) {
      out.push_back({static_cast<unsigned>(q),
                     (p.value & bit) ? Polarity::OnOne : Polarity::OnZero});
    }
  }
  return out;
}

void emit(const Circuit& source, const Fragment& f, Circuit& out) {
  if (!f.rewritten) {
    for (std::size_t k = 0; k < f.gate_count; ++k) out.add(source.ops()[f.first_gate + k]);
    return;
  }
  const auto controls = controls_from_pattern(f.controls);
  if (f.fires_on_one) {
    out.add(GateKind::phase(f.phi), f.target, controls);
    return;
  }
  const auto x_controls = f.controlled_conjugation ? controls : std::vector<Control>{};
  out.add(GateKind::x(), f.target, x_controls);
  out.add(GateKind::phase(f.phi), f.target, controls);
  out.add(GateKind::x(), f.target, x_controls);
}

// Applies `merge` to every maximal run of fragments; runs it leaves untouched
// are copied verbatim.
template <typename MergeFn>
Circuit rewrite_runs(const Circuit& circuit, MergeFn merge) {
  const auto items = decompose(circuit);
  Circuit out(circuit.num_qubits());
  std::vector<Fragment> run;
  auto flush = [&] {
    if (run.empty()) return;
    if (merge(run)) {
      std::sort(run.begin(), run.end(),
                [](const Fragment& a, const Fragment& b) { return a.first_gate < b.first_gate; });
    }
    for (const Fragment& f : run) emit(circuit, f, out);
    run.clear();
  };
  for (const Item& item : items) {
    if (item.fragment) {
      run.push_back(*item.fragment);
    } else {
      flush();
      out.add(circuit.ops()[item.gate]);
    }
  }
  flush();
  return out;
}

std::uint64_t phase_key(double phi) { return std::bit_cast<std::uint64_t>(phi); }

Fragment combine(const Fragment& a, const Fragment& b) {
  Fragment m = a;
  m.first_gate = std::min(a.first_gate, b.first_gate);
  m.rewritten = true;
  return m;
}

// One sweep over control qubit q; returns whether anything merged.
bool merge_on_control(std::vector<Fragment>& run, unsigned q) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  using Key = std::tuple<unsigned, bool, std::uint64_t, std::uint64_t, std::uint64_t>;
  std::map<Key, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> buckets;
  for (std::size_t i = 0; i < run.size(); ++i) {
    const Fragment& f = run[i];
    if (!(f.controls.mask & bit)) continue;
    Key key{f.target, f.fires_on_one, phase_key(f.phi), f.controls.mask,
            f.controls.value & ~bit};
    auto& slot = buckets[key];
    ((f.controls.value & bit) ? slot.second : slot.first).push_back(i);
  }
  std::vector<bool> dead(run.size(), false);
  std::vector<Fragment> merged;
  for (auto& [key, slot] : buckets) {
    const std::size_t pairs = std::min(slot.first.size(), slot.second.size());
    for (std::size_t k = 0; k < pairs; ++k) {
      const Fragment& a = run[slot.first[k]];
      const Fragment& b = run[slot.second[k]];
      Fragment m = combine(a, b);
      m.controls.mask &= ~bit;
      m.controls.value &= ~bit;
      m.controlled_conjugation = a.controlled_conjugation || b.controlled_conjugation;
      merged.push_back(m);
      dead[slot.first[k]] = dead[slot.second[k]] = true;
    }
  }
  if (merged.empty()) return false;
  std::vector<Fragment> next;
  for (std::size_t i = 0; i < run.size(); ++i) {
    if (!dead[i]) next.push_back(run[i]);
  }
  next.insert(next.end(), merged.begin(), merged.end());
  run = std::move(next);
  return true;
}

bool merge_blocks(std::vector<Fragment>& run) {
  bool any = false;
  for (bool changed = true; changed;) {
    changed = false;
    for (unsigned q = 0; q < 64; ++q) changed |= merge_on_control(run, q);
    any |= changed;
  }
  return any;
}

bool merge_target_polarity(std::vector<Fragment>& run) {
  bool any = false;
  for (bool changed = true; changed;) {
    changed = false;
    using Key = std::tuple<unsigned, std::uint64_t, std::uint64_t, std::uint64_t>;
    std::map<Key, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> buckets;
    for (std::size_t i = 0; i < run.size(); ++i) {
      const Fragment& f = run[i];
      if (f.controls.mask == 0) continue;
      Key key{f.target, phase_key(f.phi), f.controls.mask, f.controls.value};
      auto& slot = buckets[key];
      (f.fires_on_one ? slot.second : slot.first).push_back(i);
    }
    std::vector<bool> dead(run.size(), false);
    std::vector<Fragment> merged;
    for (auto& [key, slot] : buckets) {
      const std::size_t pairs = std::min(slot.first.size(), slot.second.size());
      for (std::size_t k = 0; k < pairs; ++k) {
        const Fragment& even = run[slot.first[k]];
        const Fragment& odd = run[slot.second[k]];
        Fragment m = combine(even, odd);
        const unsigned top = 63U - static_cast<unsigned>(std::countl_zero(even.controls.mask));
        const std::uint64_t bit = std::uint64_t{1} << top;
        m.target = top;
        m.fires_on_one = (even.controls.value & bit) != 0;
        m.controls.mask &= ~bit;
        m.controls.value &= ~bit;
        m.controlled_conjugation = even.controlled_conjugation;
        merged.push_back(m);
        dead[slot.first[k]] = dead[slot.second[k]] = true;
      }
    }
    if (!merged.empty()) {
      std::vector<Fragment> next;
      for (std::size_t i = 0; i < run.size(); ++i) {
        if (!dead[i]) next.push_back(run[i]);
      }
      next.insert(next.end(), merged.begin(), merged.end());
      run = std::move(next);
      changed = any = true;
    }
  }
  return any;
}

}  // namespace

GateCostReport gate_cost(const Circuit& circuit) {
  GateCostReport r;
  for (const GateOp& op : circuit.ops()) {
    const std::size_t k = op.controls.size();
    if (k == 0) ++r.n_single;
    if (k >= 2) ++r.n_multi_controlled;
    if (op.kind.type == GateType::Phase) {
      r.n_two_qubit_equiv += std::size_t{1} << k;
    } else if (k >= 1) {
      r.n_other_controlled_equiv += std::size_t{1} << k;
    }
  }
  return r;
}

Circuit simplify_principle1(const Circuit& circuit) {
  return rewrite_runs(circuit, merge_blocks);
}

Circuit simplify_principle3(const Circuit& circuit) {
  return rewrite_runs(circuit, merge_target_polarity);
}

Circuit simplify_principle2(const Circuit& circuit) {
  const auto& ops = circuit.ops();
  Circuit out(circuit.num_qubits());
  for (std::size_t i = 0; i < ops.size();) {
    const GateOp& op = ops[i];
    if (op.kind.type == GateType::X && !op.controls.empty() && i + 2 < ops.size()) {
      const GateOp& mid = ops[i + 1];
      if (mid.kind.type == GateType::Phase && mid.target == op.target && ops[i + 2] == op &&
          same_pattern(op.controls, mid.controls)) {
        out.add(GateKind::x(), op.target);
        out.add(mid);
        out.add(GateKind::x(), op.target);
        i += 3;
        continue;
      }
    }
    out.add(op);
    ++i;
  }
  return out;
}

Circuit simplify_all(const Circuit& circuit) {
  return simplify_principle2(simplify_principle3(simplify_principle1(circuit)));
}

}  // namespace qsearch
