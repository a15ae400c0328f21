#include "coxdec/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coxdec/catalog.hpp"
#include "coxdec/coxeter.hpp"
#include "coxdec/decomp.hpp"
#include "coxdec/descent.hpp"
#include "coxdec/external.hpp"
#include "coxdec/linalg.hpp"

namespace coxdec {

namespace {

CoxMatrix load_matrix(const JobSpec& spec) {
  if (!spec.type.empty()) return builtin(spec.type);
  if (spec.matrix_file.empty())
    throw std::invalid_argument("need --type or --matrix");
  std::ifstream in(spec.matrix_file);
  if (!in) throw std::invalid_argument("cannot open " + spec.matrix_file);
  return CoxMatrix::parse(in);
}

std::vector<int> resolve_I(const CoxMatrix& m, const std::vector<std::string>& I) {
  std::vector<int> out;
  for (const auto& label : I) {
    int idx = m.index_of(label);
    if (idx < 0) throw std::invalid_argument("unknown generator: " + label);
    out.push_back(idx);
  }
  return out;
}

std::string ambient_name(const JobSpec& spec) {
  return spec.type.empty() ? spec.matrix_file : spec.type;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

int cmd_decompose(const JobSpec& spec, std::ostream& out) {
  CoxMatrix m = load_matrix(spec);
  ContextPtr ctx = CoxContext::make(m);
  Decomposition dec(ctx, resolve_I(m, spec.I), spec.bound);
  DecompReport rep = build_report(dec, ambient_name(spec));
  std::string text = render_report(rep);
  out << text;
  if (!spec.out_file.empty()) write_file(spec.out_file, text);
  if (!spec.dot_file.empty()) write_file(spec.dot_file, render_dot(rep));
  return kExitOk;
}

int cmd_verify(const JobSpec& spec, std::ostream& out) {
  CoxMatrix m = load_matrix(spec);
  ContextPtr ctx = CoxContext::make(m);
  Decomposition dec(ctx, resolve_I(m, spec.I), spec.bound);
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out << " (" << detail << ")";
    out << "\n";
    if (!ok) all_ok = false;
  };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      fn();
      report(name, true, "");
    } catch (const std::exception& e) {
      report(name, false, e.what());
    }
  };

  guarded("tilde-matrix-triple-agreement", [&] {
    const CoxMatrix& tm = dec.tilde_matrix();
    CoxMatrix tr = dec.tilde_matrix_via_roots();
    if (!tm.same_up_to_labels(tr))
      throw std::logic_error("formula and root criterion disagree");
    auto orders = dec.tilde_orders();
    for (int i = 0; i < dec.gen_count(); ++i)
      for (int j = 0; j < dec.gen_count(); ++j) {
        int mij = tm.m[i][j];
        const OrderResult& o = orders[i][j];
        if (bond_finite(mij)) {
          if (!(o.finite() && o.value == mij))
            throw std::logic_error("order computation disagrees with the matrix");
        } else if (o.finite()) {
          throw std::logic_error("infinite entry has finite order");
        }
      }
  });
  guarded("canonical-generators", [&] {
    for (int g = 0; g < dec.gen_count(); ++g) dec.verify_canonical(g);
  });
  guarded("components", [&] { dec.components(); });
  guarded("factorization-ball", [&] {
    std::vector<Elem> ball = ctx->enumerate_ball(6);
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (const Elem& w : ball) {
      auto [wt, a] = dec.factorize(w);
      if (!dec.phi(wt).is_identity())
        throw std::logic_error("kernel part has nontrivial image");
      if (!(wt * a == w)) throw std::logic_error("factorization does not multiply back");
      if (!pairs.emplace(wt.word(), a.word()).second)
        throw std::logic_error("factorization is not injective");
    }
  });
  guarded("length-identity", [&] {
    std::vector<Elem> ball = ctx->enumerate_ball(6);
    for (const Elem& w : ball) {
      if (!dec.phi(w).is_identity()) continue;
      if (dec.ell_J(w) != dec.tilde_length(w))
        throw std::logic_error("ell_J differs from the tilde length at " + w.str());
    }
  });
  if (ctx->is_finite() && ctx->rank() <= 6) {
    guarded("parabolic-compatibility", [&] {
      for (unsigned mask = 0; mask < (1u << ctx->rank()); ++mask) {
        std::vector<int> K;
        for (int s = 0; s < ctx->rank(); ++s)
          if (mask & (1u << s)) K.push_back(s);
        dec.verify_parabolic(K);
      }
    });
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_descent(const JobSpec& spec, std::ostream& out) {
  CoxMatrix m = load_matrix(spec);
  ContextPtr ctx = CoxContext::make(m);
  Decomposition dec(ctx, resolve_I(m, spec.I));
  if (!ctx->is_finite()) throw std::invalid_argument("descent requires a finite group");
  TildeDescent td(dec, ctx->enumerate_group());
  bool all_ok = true;
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      fn();
      out << "PASS " << name << "\n";
    } catch (const std::exception& e) {
      out << "FAIL " << name << " (" << e.what() << ")\n";
      all_ok = false;
    }
  };
  guarded("ring-morphism", [&] { td.verify_morphism(); });
  guarded("z-conjugation", [&] {
    for (unsigned k = 0; k < (1u << ctx->rank()); ++k) td.verify_conjugaison(k);
  });
  guarded("image-is-fixed-subalgebra", [&] { td.verify_image_fixed(); });
  guarded("character-diagram", [&] { td.verify_diagram(); });
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_external(const JobSpec& spec, std::ostream& out) {
  if (spec.ext_file.empty()) throw std::invalid_argument("need --ext FILE");
  std::ifstream in(spec.ext_file);
  if (!in) throw std::invalid_argument("cannot open " + spec.ext_file);
  ExtData data = ExtData::parse(in);
  ExtResult res = check_external(data);
  switch (res.status) {
    case ExtResult::kAccepted: {
      out << "accepted: (W, I u J) is a Coxeter system\n";
      std::ostringstream os;
      res.matrix.print(os);
      out << os.str();
      if (!spec.out_file.empty()) write_file(spec.out_file, os.str());
      return kExitOk;
    }
    case ExtResult::kViolation:
      out << "violation " << res.detail << "\n";
      return kExitVerificationFailed;
    case ExtResult::kInconclusive:
      out << "inconclusive: " << res.detail << "\n";
      return kExitInconclusive;
  }
  return kExitInputError;
}

int cmd_table(const JobSpec& spec, std::ostream& out) {
  std::vector<TableRow> rows;
  if (!spec.rows_file.empty()) {
    std::ifstream in(spec.rows_file);
    if (!in) throw std::invalid_argument("cannot open " + spec.rows_file);
    rows = parse_table_rows(in);
  } else {
    TableScale scale;
    scale.dihedral_m_max += spec.table_scale;
    scale.bn_max += spec.table_scale;
    scale.bn_affine_max += spec.table_scale;
    scale.cn_affine_max += spec.table_scale;
    rows = table_rows(scale);
  }
  bool all_ok = true;
  for (const TableRow& row : rows) {
    RowReport rep = verify_row(row);
    out << (rep.ok ? "PASS " : "FAIL ") << rep.detail << "\n";
    if (!rep.ok) all_ok = false;
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case JobSpec::kDecompose: return cmd_decompose(spec, out);
      case JobSpec::kVerify: return cmd_verify(spec, out);
      case JobSpec::kDescent: return cmd_descent(spec, out);
      case JobSpec::kExternal: return cmd_external(spec, out);
      case JobSpec::kTable: return cmd_table(spec, out);
    }
    err << "error: unknown command\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"semidirect product decompositions of Coxeter groups"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string I_list;

  auto add_input_opts = [&](CLI::App* cmd) {
    cmd->add_option("--type", spec.type, "built-in type, e.g. B3, I2(6), C~2");
    cmd->add_option("--matrix", spec.matrix_file, "Coxeter matrix file");
    cmd->add_option("--I", I_list, "comma-separated generators of I");
    cmd->add_option("--bound", spec.bound, "W_I enumeration bound (else finite)");
    cmd->add_option("--out", spec.out_file, "write the report to a file");
  };

  CLI::App* dec = app.add_subcommand("decompose", "compute a decomposition report");
  add_input_opts(dec);
  dec->add_option("--dot", spec.dot_file, "write the tilde diagram as DOT");
  CLI::App* ver = app.add_subcommand("verify", "run per-invariant verification");
  add_input_opts(ver);
  CLI::App* des = app.add_subcommand("descent", "descent-algebra checks");
  add_input_opts(des);
  CLI::App* ext = app.add_subcommand("external", "external semidirect product test");
  ext->add_option("--ext", spec.ext_file, "ExtData input file");
  ext->add_option("--out", spec.out_file, "write the resulting matrix to a file");
  CLI::App* tab = app.add_subcommand("table", "verify the classification table");
  tab->add_option("--rows", spec.rows_file, "verify rows from a file instead");
  tab->add_option("--extend", spec.table_scale,
                  "extend every table family bound by this much");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return kExitOk;
    }
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (dec->parsed())
    spec.command = JobSpec::kDecompose;
  else if (ver->parsed())
    spec.command = JobSpec::kVerify;
  else if (des->parsed())
    spec.command = JobSpec::kDescent;
  else if (ext->parsed())
    spec.command = JobSpec::kExternal;
  else
    spec.command = JobSpec::kTable;

  std::stringstream ss(I_list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) spec.I.push_back(item);

  return run(spec, out, err);
}

}  // namespace coxdec
