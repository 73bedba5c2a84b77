// Copyright 2026 The L4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// l4: check, compile, interview, ask and serve.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "l4/diagnostic.h"
#include "l4/interview.h"
#include "l4/pipeline.h"
#include "l4/realizer.h"
#include "l4/reasoner.h"
#include "l4/service.h"

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw l4::Error(l4::ErrorCode::kNotFound, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw l4::Error(l4::ErrorCode::kInvalidArgument, "cannot write " + path);
}

l4::MorphLexicon Morphology(const std::string& lexicon_path) {
  l4::MorphLexicon morph = l4::MorphLexicon::Seeded();
  if (!lexicon_path.empty()) morph.LoadConfig(ReadFile(lexicon_path));
  return morph;
}

struct Options {
  std::string file;
  std::string goal;
  std::string output;
  std::string lexicon;
  std::vector<std::string> where;
  std::string facts;
  bool all_ways = false;
  std::string open;
  bool html = false;
  bool json = false;
  std::string config;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string persist_dir;
  std::string programs;
  std::string ui_dir;
};

l4::HttpServer* g_server = nullptr;

void OnSignal(int) {
  if (g_server != nullptr) g_server->Stop();
}

int Serve(const Options& o) {
  l4::ServiceOptions so;
  so.persist_dir = o.persist_dir;
  so.morph = Morphology(o.lexicon);
  so.ui_dir = o.ui_dir;
  if (!o.programs.empty()) {
    for (const auto& f : std::filesystem::directory_iterator(o.programs)) {
      if (f.path().extension() == ".l4") {
        so.programs[f.path().stem().string()] = f.path().string();
      }
    }
  }
  l4::Service service(std::move(so));
  size_t restored = service.Restore();
  l4::HttpServer server(&service);
  int port = server.Bind(o.host, o.port);
  if (port < 0) {
    std::cerr << "l4: cannot bind " << o.host << ":" << o.port << "\n";
    return 1;
  }
  std::cerr << "l4: listening on http://" << o.host << ":" << port
            << " (" << restored << " sessions restored)\n";
  g_server = &server;
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  server.Listen();
  g_server = nullptr;
  return 0;
}

int Run(const std::string& command, const Options& o) {
  if (command == "serve") return Serve(o);

  l4::LoadedProgram loaded =
      l4::LoadProgram(ReadFile(o.file), Morphology(o.lexicon));
  if (command == "check") return 0;

  l4::QuerySpec query = l4::MakeQuery(
      loaded.compiled, o.goal, l4::BindGoal(loaded.compiled, o.goal, o.where));
  if (command == "compile") {
    l4::ScaspExport out = l4::ExportScasp(loaded.compiled.clauses, query);
    for (const auto& w : out.warnings) std::cerr << "l4: warning: " << w << "\n";
    WriteOutput(o.output, out.text);
    return 0;
  }
  if (command == "interview") {
    l4::QuestionPlan plan = l4::BuildPlan(loaded.compiled, query,
                                          loaded.lexicon, l4::Basename(o.file));
    WriteOutput(o.output, o.json ? l4::InterviewJson(plan) : l4::EmitLexsis(plan));
    return 0;
  }

  l4::FactBase facts = l4::FactsFromJson(ReadFile(o.facts));
  std::vector<l4::AnswerSet> sets;
  if (o.all_ways) {
    l4::HypotheticalSpace space =
        l4::MakeHypotheticalSpace(loaded.compiled, facts, o.open);
    sets = l4::EnumerateHypotheticals(loaded.compiled.clauses, facts, space,
                                      query);
  } else {
    sets = l4::Answer(loaded.compiled.clauses, facts, query);
  }
  l4::RealizerContext ctx{&loaded.compiled, &loaded.lexicon, facts.names, {}};
  l4::RealizedText text = sets.empty() ? l4::RealizeNoAnswer(query, facts, ctx)
                                       : l4::RealizeAnswers(sets, ctx);
  WriteOutput(o.output, (o.html ? text.html : text.text) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L4 rules toolchain"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--lexicon", o.lexicon, "noun morphology file")
      ->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "parse and type-check a program");
  check->add_option("file", o.file)->required()->check(CLI::ExistingFile);

  auto goal_options = [&](CLI::App* sub) {
    sub->add_option("file", o.file)->required()->check(CLI::ExistingFile);
    sub->add_option("--goal", o.goal, "goal predicate")->required();
    sub->add_option("--where", o.where, "bind a goal argument: Class=constant");
    sub->add_option("-o,--output", o.output, "output file");
  };
  auto* compile = app.add_subcommand("compile", "export s(CASP) clauses");
  goal_options(compile);
  auto* interview = app.add_subcommand("interview", "emit the LEXSIS document");
  goal_options(interview);
  interview->add_flag("--json", o.json, "emit the UI question plan instead");
  auto* ask = app.add_subcommand("ask", "answer the goal from facts");
  goal_options(ask);
  ask->add_option("--facts", o.facts, "facts JSON")
      ->required()
      ->check(CLI::ExistingFile);
  auto* open = ask->add_option("--open", o.open,
                               "predicate to vary over its enumerated argument");
  ask->add_flag("--all-ways", o.all_ways, "enumerate hypothetical answers")
      ->needs(open);
  open->needs("--all-ways");
  ask->add_flag("--html", o.html, "print HTML");

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->add_option("--port", o.port, "port, 0 for any")->check(CLI::Range(0, 65535));
  serve->add_option("--host", o.host, "address to bind");
  serve->add_option("--persist-dir", o.persist_dir, "event log directory");
  serve->add_option("--programs", o.programs, "directory of .l4 programs")
      ->check(CLI::ExistingDirectory);
  serve->add_option("--ui-dir", o.ui_dir, "UI bundle served under /app")
      ->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return Run(command, o);
  } catch (const l4::Error& err) {
    if (err.diagnostics().empty()) {
      std::cerr << "l4: " << err.what() << "\n";
    } else {
      std::cerr << l4::FormatDiagnostics(err.diagnostics(), o.file);
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "l4: " << e.what() << "\n";
    return 1;
  }
}
