// Copyright 2026 The singlab Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "singlab/components.hpp"
#include "singlab/error.hpp"
#include "singlab/eta.hpp"
#include "singlab/hjres.hpp"
#include "singlab/render.hpp"
#include "singlab/search.hpp"
#include "singlab/type_t.hpp"

namespace singlab::cli {

namespace {

BigInt parse_integer(const std::string& text, const char* what) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (!digits) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be a non-negative decimal integer, got '" + text + "'");
  }
  return BigInt(text);
}

CyclicQuotient parse_quotient(const std::string& p, const std::string& q) {
  return CyclicQuotient(parse_integer(p, "P"), parse_integer(q, "Q"));
}

OutputFormat format_or_throw(const std::string& text) {
  auto format = parse_output_format(text);
  if (!format) throw Error(ErrorCode::InvalidArgument, "unknown format '" + text + "'");
  return *format;
}

std::string double_text(double value) {
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

std::string negated(const ResolutionChain& chain) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(-chain[i]);
  }
  return out + ")";
}

std::string site_text(const BlowUpSite& site) {
  if (const auto* on = std::get_if<OnCurve>(&site)) {
    return "blow up curve " + std::to_string(on->index) + " (new curve " +
           (on->side == Side::Left ? "left" : "right") + ")";
  }
  return "blow up node " + std::to_string(std::get<AtNode>(site).index);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::RowLimitExceeded: return kExitResourceGuard;
    case ErrorCode::Mismatch: return kExitInternal;
    default: return kExitInvalidArguments;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolution combinatorics and invariants of cyclic quotient surface singularities",
               "singlab"};
  app.require_subcommand(1);

  std::string p_text;
  std::string q_text;
  std::string method = "exact";
  std::vector<std::string> contract_texts;
  std::string format_text = "table";
  std::string chain_text;
  std::int64_t r_max = 12;
  std::int64_t s_max = 6;
  int curves = 1;
  std::int64_t r = 2;
  std::int64_t s = 1;
  std::int64_t d = 1;
  std::int64_t n = 3;
  bool theorems = false;
  std::int64_t p_max = 2;
  std::string mode_text = "artin-only";
  bool positive = false;
  bool dedup_conjugate = false;
  std::size_t max_contractions = 3;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* resolve = app.add_subcommand("resolve", "Hirzebruch-Jung string of 1/P(1,Q)");
  resolve->add_option("P", p_text, "group order")->required();
  resolve->add_option("Q", q_text, "weight")->required();

  auto* eta = app.add_subcommand("eta", "eta invariant of the lens space S^3/(1/P(1,Q))");
  eta->add_option("P", p_text, "group order")->required();
  eta->add_option("Q", q_text, "weight")->required();
  eta->add_option("--method", method, "exact, cotangent or both")
      ->check(CLI::IsMember({"exact", "cotangent", "both"}));

  auto* invariants = app.add_subcommand("invariants", "C(X) report for one configuration");
  invariants->add_option("P", p_text, "group order")->required();
  invariants->add_option("Q", q_text, "weight")->required();
  invariants->add_option("--contract", contract_texts, "contract the type T substring A..B")
      ->take_all();
  invariants->add_option("--format", format_text, "table, json or csv");

  auto* typet = app.add_subcommand("typet", "type T strings");
  typet->require_subcommand(1);
  auto* recognize = typet->add_subcommand("recognize", "recognize a type T string");
  recognize->add_option("CHAIN", chain_text, "comma separated entries, e.g. 5,2")->required();
  auto* enumerate = typet->add_subcommand("enumerate", "list type T strings");
  enumerate->add_option("--r-max", r_max, "largest r")->required();
  enumerate->add_option("--s-max", s_max, "largest s")->required();

  auto* family = app.add_subcommand("family", "(-2)-curves attached to a type T string");
  family->add_option("--curves", curves, "number of attached (-2)-curves (1, 2 or 3)")->required();
  family->add_option("--r", r, "r")->required();
  family->add_option("--s", s, "s")->required();
  family->add_option("--d", d, "d")->required();
  family->add_option("--format", format_text, "table, json or csv");

  auto* graphs = app.add_subcommand("graphs", "non-minimal chains from iterated blow-ups");
  graphs->add_option("--non-minimal", n, "n >= 3")->required();

  auto* tables = app.add_subcommand("tables", "invariant tables for the existence theorems");
  tables->add_flag("--theorems", theorems, "emit the theorem families")->required();
  tables->add_option("--r-max", r_max, "largest r per family")->required();
  tables->add_option("--format", format_text, "table, json or csv");

  auto* search = app.add_subcommand("search", "exhaustive invariant scan over 1/p(1,q)");
  search->add_option("--p-max", p_max, "largest group order")->required();
  search->add_option("--mode", mode_text, "artin-only, single-contraction or multi-contraction");
  search->add_flag("--positive", positive, "keep only rows with C(X) > 0");
  search->add_option("--format", format_text, "table, json or csv");
  search->add_flag("--dedup-conjugate", dedup_conjugate,
                   "list each group once, with the smaller of q and q^-1");
  search->add_option("--max-contractions", max_contractions,
                     "disjoint contractions per row in multi-contraction mode");
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    std::ostringstream buffer;
    if (*resolve) {
      buffer << hj_resolve(parse_quotient(p_text, q_text)).str() << '\n';
    } else if (*eta) {
      const CyclicQuotient g = parse_quotient(p_text, q_text);
      if (method == "exact") {
        buffer << eta_exact(g).str() << '\n';
      } else if (method == "cotangent") {
        buffer << double_text(eta_cotangent(g)) << '\n';
      } else {
        const Rational exact = eta_exact(g);
        const double approx = eta_cotangent(g);
        buffer << "exact      " << exact.str() << " (" << exact.approx(15) << ")\n"
               << "cotangent  " << double_text(approx) << '\n'
               << "difference " << double_text(approx - exact.to_double()) << '\n';
      }
    } else if (*invariants) {
      std::vector<Interval> intervals;
      for (const auto& text : contract_texts) intervals.push_back(parse_interval(text));
      const ResolutionConfiguration cfg(parse_quotient(p_text, q_text), std::move(intervals));
      buffer << render({c_invariant(cfg)}, format_or_throw(format_text));
    } else if (*recognize) {
      const auto params = recognize_type_t(parse_chain(chain_text));
      if (params) {
        buffer << params->str() << "  " << type_t_group(*params).str() << '\n';
      } else {
        buffer << "none\n";
      }
    } else if (*enumerate) {
      for (const auto& entry : enumerate_type_t(r_max, s_max)) {
        buffer << entry.params.str() << "  " << entry.chain.str() << "  "
               << type_t_group(entry.params).str() << '\n';
      }
    } else if (*family) {
      const FamilyResult result = attach_family(curves, r, s, d);
      const auto format = format_or_throw(format_text);
      buffer << render({result.report}, format);
      if (format == OutputFormat::Table) {
        const FamilyClosedForm& cf = result.closed_form;
        buffer << "closed form: p=" << cf.p.str() << " q=" << cf.q.str()
               << " q_inv=" << cf.q_inv.str() << " eta=" << cf.eta.str() << " C=" << cf.c.str()
               << " (matches pipeline)\n";
      }
    } else if (*graphs) {
      ResolutionChain chain{n};
      const auto sequence = non_minimal_blow_up_sequence(n);
      buffer << "start        " << chain.str() << "  " << negated(chain) << '\n';
      for (const auto& site : sequence) {
        chain = blow_up(chain, site);
        buffer << site_text(site) << "  ->  " << chain.str() << "  " << negated(chain) << '\n';
      }
      buffer << "result       " << non_minimal_graph(n).str() << '\n';
    } else if (*tables) {
      buffer << render_theorem_rows(theorem_tables(r_max), format_or_throw(format_text));
    } else if (*search) {
      auto mode = parse_search_mode(mode_text);
      if (!mode) throw Error(ErrorCode::InvalidArgument, "unknown mode '" + mode_text + "'");
      SearchQuery query;
      query.p_max = p_max;
      query.mode = *mode;
      query.positive_only = positive;
      query.output_format = format_or_throw(format_text);
      query.max_contractions = max_contractions;
      query.dedup_conjugate = dedup_conjugate;
      query.workers = jobs;
      query.row_limit = row_limit_from_env();
      buffer << render(scan(query), query.output_format);
    }
    out << buffer.str();
    return kExitOk;
  } catch (const Error& e) {
    err << "singlab: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "singlab: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace singlab::cli
