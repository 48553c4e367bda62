// SPDX-License-Identifier: Apache-2.0

#include "cli_app.hpp"

int main(int argc, char** argv) { return pollinfo::cli::run(argc, argv); }
