#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "tauroot/cyreduce.hpp"
#include "tauroot/dynkin.hpp"
#include "tauroot/error.hpp"
#include "tauroot/io.hpp"
#include "tauroot/mckay.hpp"
#include "tauroot/normal_form.hpp"
#include "tauroot/root_search.hpp"
#include "tauroot/shiftedsum.hpp"
#include "tauroot/ztranslation.hpp"

namespace tauroot::cli {

namespace {

/// Bad flags, unreadable files, bad environment: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kOffsetEnv = "TAUROOT_OFFSET_BOUND";

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::string read_text(const Io& io, const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(io.in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

Json read_json(const Io& io, const std::string& path) { return parse_json(read_text(io, path)); }

void emit(const Io& io, const Json& j) { io.out << j.dump(2) << '\n'; }

void emit_quiver(const Io& io, const ColoredQuiver& q, bool dot) {
  if (dot)
    io.out << to_dot(q);
  else
    emit(io, quiver_to_json(q));
}

std::optional<int> env_offset_bound() {
  const char* raw = std::getenv(kOffsetEnv);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 1000)
    throw UsageError(std::string(kOffsetEnv) + " must be an integer in [0,1000], got '" + raw + "'");
  return static_cast<int>(v);
}

struct McKayArgs {
  int n = 0;
  std::vector<int> weights;
  std::vector<int> kept;
  bool has_kept = false;
  bool dot = false;
  int dim = 0;
  std::optional<int> source;

  CyclicWeights w() const { return {n, weights}; }
};

void add_weight_flags(CLI::App* sub, McKayArgs& a) {
  sub->add_option("--n", a.n, "modulus n")->required();
  sub->add_option("--weights", a.weights, "weights a_0,...,a_d")->required()->delimiter(',');
}

std::string quotient_verdict(const ColoredQuiver& quotient, bool hereditary) {
  if (!hereditary) return "not hereditary";
  return quotient.arrows.empty() ? "semisimple hereditary" : "hereditary";
}

void cmd_mckay(const Io& io, const McKayArgs& a) {
  const ColoredQuiver q = mckay_quiver(a.w());
  if (!a.has_kept) return emit_quiver(io, q, a.dot);
  const CutSet cut = normalize_cut(a.w(), {a.kept});
  const bool hereditary = is_hereditary_quotient(q, cut);
  const ColoredQuiver quotient = quotient_quiver(q, cut);
  if (a.dot) return emit_quiver(io, quotient, true);
  Json j = Json::object();
  j["quiver"] = quiver_to_json(q);
  j["kept"] = cut.kept;
  j["hereditary"] = hereditary;
  j["semisimple"] = quotient.arrows.empty();
  j["verdict"] = quotient_verdict(quotient, hereditary);
  j["quotient"] = quiver_to_json(quotient);
  emit(io, j);
}

void cmd_hquiver(const Io& io, const McKayArgs& a) {
  const CutSet cut{a.kept};
  if (a.dim == 3) return emit_quiver(io, h_quiver_d3(a.w(), cut), a.dot);
  if (a.dim == 4) return emit_quiver(io, h_quiver_d4(a.w(), cut), a.dot);
  throw UsageError("--dim must be 3 or 4");
}

void cmd_ar_angle(const Io& io, const McKayArgs& a) {
  const CutSet cut = normalize_cut(a.w(), {a.kept});
  if (a.source) return emit(io, ar_angle_to_json(ar_angle(a.w(), cut, *a.source)));
  Json all = Json::array();
  for (int j : cut.kept) all.push_back(ar_angle_to_json(ar_angle(a.w(), cut, j)));
  emit(io, all);
}

struct FileArgs {
  std::string quiver, autom, partition, presentation, input;
  std::vector<std::string> removed;
  int l = 1;
  std::optional<int> offset_bound;
  bool dot = false;
  bool repeat_edges = false;
  std::string to;
};

void cmd_root_search(const Io& io, const FileArgs& a) {
  const ColoredQuiver q = quiver_from_json(read_json(io, a.quiver));
  std::optional<int> bound = a.offset_bound ? a.offset_bound : env_offset_bound();
  const int used = bound.value_or(static_cast<int>(q.vertex_count()));
  Json j = Json::object();
  j["l"] = a.l;
  j["offset_bound"] = used;
  j["roots"] = Json::array();
  for (const auto& f : find_tau_roots(q, a.l, used)) j["roots"].push_back(autom_to_json(q, f));
  emit(io, j);
}

void cmd_f_section(const Io& io, const FileArgs& a) {
  const ColoredQuiver q = quiver_from_json(read_json(io, a.quiver));
  const TQAutomorphism f = autom_from_json(q, read_json(io, a.autom));
  const auto t = construct_F_section(q, f, a.l);
  const auto sigma = f_orbit_union(f, a.l, t);
  std::vector<int> levels;
  for (const auto& v : sigma) levels.push_back(v.level);
  const auto [lo, hi] = auto_window(levels, f, a.l);
  Json j = Json::object();
  j["f_section"] = zvertices_to_json(q, t);
  j["section"] = zvertices_to_json(q, sigma);
  j["is_f_section"] = is_F_section(q, f, a.l, t);
  j["is_section"] = is_section(build_window(q, lo, hi), sigma);
  j["no_backward_arrows"] = no_backward_arrows(q, f, a.l, t);
  emit(io, j);
}

void cmd_normal_form(const Io& io, const FileArgs& a) {
  const ColoredQuiver q = quiver_from_json(read_json(io, a.quiver));
  std::optional<NormalFormPartition> p;
  if (!a.partition.empty())
    p = partition_from_json(read_json(io, a.partition));
  else
    p = find_normal_form_partition(q, a.l);
  Json j = Json::object();
  j["l"] = a.l;
  if (!p) {
    j["partition"] = nullptr;
    j["normal_form"] = false;
    j["root"] = nullptr;
    return emit(io, j);
  }
  const auto check = check_root_normal_form_detailed(q, a.l, *p);
  j["partition"] = partition_to_json(*p);
  j["normal_form"] = check.ok();
  j["conditions"] = {{"isomorphic_blocks", check.isomorphic_blocks},
                     {"forward_only", check.forward_only},
                     {"graph_symmetry", check.graph_symmetry}};
  if (check.ok()) {
    const TQAutomorphism f = root_from_normal_form(q, a.l, *p);
    j["root"] = autom_to_json(q, f);
    j["is_root"] = is_root_of_tau(q, f, a.l);
  } else {
    j["root"] = nullptr;
  }
  emit(io, j);
}

void cmd_cy_reduce(const Io& io, const FileArgs& a) {
  const AlgebraPresentation p = presentation_from_json(read_json(io, a.presentation));
  const ReductionReport r = reduction_report(p, a.removed);
  if (a.dot) return emit_quiver(io, r.reduced, true);
  emit(io, report_to_json(r));
}

void cmd_star(const Io& io, int n, int m, bool dot) { emit_quiver(io, star_quiver(n, m), dot); }

void cmd_dynkin_survey(const Io& io, const std::vector<std::string>& families, int lmax,
                       std::optional<int> offset_bound) {
  if (lmax < 2) throw UsageError("--lmax must be at least 2");
  const std::optional<int> bound = offset_bound ? offset_bound : env_offset_bound();
  Json rows = Json::array();
  for (const auto& family : families) {
    const ColoredQuiver q = dynkin_quiver(family);
    for (int l = 2; l <= lmax; ++l) {
      const auto roots = find_tau_roots(q, l, bound);
      Json row = Json::object();
      row["quiver"] = family;
      row["l"] = l;
      row["root_exists"] = !roots.empty();
      row["roots"] = roots.size();
      rows.push_back(std::move(row));
    }
  }
  emit(io, rows);
}

void cmd_convert(const Io& io, const FileArgs& a) {
  const std::string text = read_text(io, a.input);
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string::npos && text[first] == '{';
  const ColoredQuiver q = is_json ? deserialize(text) : from_dot(text);
  std::string to = a.to.empty() ? (is_json ? "dot" : "json") : a.to;
  if (to == "dot") {
    DotOptions opts;
    opts.repeat_multi_edges = a.repeat_edges;
    io.out << to_dot(q, opts);
  } else {
    emit(io, quiver_to_json(q));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roots of the AR translation, McKay quivers and shifted-sum quivers", "tauroot"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  McKayArgs mk;
  FileArgs fa;
  int star_n = 1, star_m = 1, lmax = 3;
  std::vector<std::string> families;

  auto* mckay = app.add_subcommand("mckay", "McKay quiver of 1/n(a_0,...,a_d)");
  add_weight_flags(mckay, mk);
  mckay->add_option("--kept", mk.kept, "vertices of the quotient")->delimiter(',');
  mckay->add_flag("--dot", mk.dot, "emit DOT");

  auto* hq = app.add_subcommand("hquiver", "quiver of the shifted-sum algebra, d = 3 or 4");
  add_weight_flags(hq, mk);
  hq->add_option("--kept", mk.kept, "vertices of the quotient")->required()->delimiter(',');
  hq->add_option("--dim", mk.dim, "d")->required()->check(CLI::IsMember({3, 4}));
  hq->add_flag("--dot", mk.dot, "emit DOT");

  auto* ar = app.add_subcommand("ar-angle", "middle terms of the AR (d+2)-angle");
  add_weight_flags(ar, mk);
  ar->add_option("--kept", mk.kept, "vertices of the quotient")->required()->delimiter(',');
  ar->add_option("--j", mk.source, "source vertex (default: every kept vertex)");

  auto* cy = app.add_subcommand("cy-reduce", "two-copy quiver of a CY reduction");
  cy->add_option("--presentation", fa.presentation, "presentation JSON")->required();
  cy->add_option("--removed", fa.removed, "removed vertices")->delimiter(',');
  cy->add_flag("--dot", fa.dot, "emit the reduced quiver as DOT");

  auto* rs = app.add_subcommand("root-search", "all l-th roots of tau^-1 with bounded offsets");
  rs->add_option("--quiver", fa.quiver, "quiver JSON")->required();
  rs->add_option("--l", fa.l, "root order")->required()->check(CLI::PositiveNumber);
  rs->add_option("--offset-bound", fa.offset_bound, "bound on |delta|")->check(CLI::NonNegativeNumber);

  auto* fs = app.add_subcommand("f-section", "F-section and section of a root");
  fs->add_option("--quiver", fa.quiver, "quiver JSON")->required();
  fs->add_option("--autom", fa.autom, "automorphism JSON")->required();
  fs->add_option("--l", fa.l, "root order")->required()->check(CLI::PositiveNumber);

  auto* nf = app.add_subcommand("normal-form", "check a normal-form partition and build its root");
  nf->add_option("--quiver", fa.quiver, "quiver JSON")->required();
  nf->add_option("--l", fa.l, "number of blocks")->required()->check(CLI::PositiveNumber);
  nf->add_option("--partition", fa.partition, "partition JSON (default: search, <= 10 vertices)");

  auto* st = app.add_subcommand("star", "shifted-sum quiver for End(T) = k");
  st->add_option("--n", star_n, "n")->required()->check(CLI::PositiveNumber);
  st->add_option("--m", star_m, "arrow multiplicity")->required()->check(CLI::NonNegativeNumber);
  st->add_flag("--dot", mk.dot, "emit DOT");

  auto* ds = app.add_subcommand("dynkin-survey", "which Dynkin quivers have l-th roots");
  ds->add_option("--family", families, "types such as A4,D5,E6")->required()->delimiter(',');
  ds->add_option("--lmax", lmax, "largest l (from 2)");
  ds->add_option("--offset-bound", fa.offset_bound, "bound on |delta|")->check(CLI::NonNegativeNumber);

  auto* cv = app.add_subcommand("convert", "quiver JSON <-> DOT");
  cv->add_option("--in", fa.input, "input file, '-' for stdin")->required();
  cv->add_option("--to", fa.to, "json or dot (default: the other format)")
      ->check(CLI::IsMember({"json", "dot"}));
  cv->add_flag("--repeat-edges", fa.repeat_edges, "DOT: one edge per arrow instead of a label");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  mk.has_kept = mckay->count("--kept") > 0;

  const Io io{in, out};
  try {
    if (*mckay) cmd_mckay(io, mk);
    else if (*hq) cmd_hquiver(io, mk);
    else if (*ar) cmd_ar_angle(io, mk);
    else if (*cy) cmd_cy_reduce(io, fa);
    else if (*rs) cmd_root_search(io, fa);
    else if (*fs) cmd_f_section(io, fa);
    else if (*nf) cmd_normal_form(io, fa);
    else if (*st) cmd_star(io, star_n, star_m, mk.dot);
    else if (*ds) cmd_dynkin_survey(io, families, lmax, fa.offset_bound);
    else if (*cv) cmd_convert(io, fa);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace tauroot::cli
