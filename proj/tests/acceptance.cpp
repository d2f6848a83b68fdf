// Acceptance ladder: runs every verification campaign at its default scale
// and prints one verdict line per criterion. Exit status 0 means every
// criterion passed; anything else is a finding.

#include <iostream>

#include "snp/verify.hpp"

int main() {
    snp::CampaignOptions opt;
    opt.command = "acceptance";
    opt.dump_dir = "acceptance-findings";
    const bool ok = snp::run_acceptance(opt, std::cout);
    return ok ? 0 : 1;
}
