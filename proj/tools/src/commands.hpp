#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slu::cli {

/// Process exit codes.
enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct Options {
  unsigned p = 0, e = 1, q = 0;
  std::string kind, subgroup = "cyclic", group = "AR", block = "last", out, out_dir;
  std::uint64_t budget = 0;
  unsigned n = 0;
  bool json = false;
  std::vector<std::string> files;
};

int field_info(const Options& o);
int group_info(const Options& o);
int unital_search(const Options& o);
int para_gen(const Options& o);
int para_verify(const Options& o);
int para_enum(const Options& o);
int para_stab(const Options& o);
int para_orbits(const Options& o);
int close_cmd(const Options& o);
int design_verify(const Options& o);
int iso_aut(const Options& o);
int iso_cmp(const Options& o);
int iso_blockfix(const Options& o);
int trans_report(const Options& o);
int trans_all(const Options& o);
int repro_counts(const Options& o);
int repro_table1(const Options& o);
int repro_table2(const Options& o);
int repro_leonids(const Options& o);

}  // namespace slu::cli
