#include "meander/cli.hpp"

#include "meander/meander.hpp"
#include "meander/noncrossing.hpp"
#include "meander/render.hpp"
#include "meander/surface.hpp"
#include "meander/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace meander::cli
{

namespace
{

using Json = nlohmann::ordered_json;

/// Thrown by subcommands on bad input; maps to exit code 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Settings
{
  int order = 0;
  std::string format = "text";
  std::string output;
  std::optional<int> max_order;
  int jobs = 1;

  /// --max-order, else the environment variable, else the fallback.
  int cap(int fallback) const
  {
    if (max_order)
      return *max_order;
    if (char const *env = std::getenv(cap_environment_variable)) {
      try {
        std::size_t used = 0;
        int const value = std::stoi(env, &used);
        if (used == std::string(env).size() && value > 0)
          return value;
      } catch (std::exception const &) {
      }
      throw UsageError(std::string(cap_environment_variable) + " must be a positive integer");
    }
    return fallback;
  }

  bool json() const { return format == "json"; }
};

void add_order(CLI::App *sub, Settings &settings)
{
  sub->add_option("-n,--order", settings.order, "Order n of the symmetric group")
    ->required()
    ->check(CLI::PositiveNumber);
}

void add_format(CLI::App *sub, Settings &settings, std::vector<std::string> const &choices = {"text", "json"})
{
  sub->add_option("--format", settings.format, "Output format")->check(CLI::IsMember(choices));
}

void add_cap(CLI::App *sub, Settings &settings)
{
  sub->add_option("--max-order", settings.max_order, "Override the size cap for this command")
    ->check(CLI::PositiveNumber);
}

void add_render_options(CLI::App *sub, RenderOptions &options)
{
  sub->add_option("--width", options.width, "Document width in pixels")->check(CLI::PositiveNumber);
  sub->add_option("--height", options.height, "Document height in pixels")->check(CLI::PositiveNumber);
  sub->add_option("--stroke", options.stroke_width, "Stroke width")->check(CLI::PositiveNumber);
}

std::string dump(Json const &doc) { return doc.dump() + "\n"; }

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Meanders, noncrossing partitions and transposition distances", "meander"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("-o,--output", settings.output, "Write data to this file instead of stdout");

  std::function<std::string()> action;

  // enumerate
  bool count_only = false;
  {
    auto *sub = app.add_subcommand("enumerate", "Count (or list) meanders of order n");
    add_order(sub, settings);
    add_format(sub, settings);
    add_cap(sub, settings);
    sub->add_flag("--count-only", count_only, "Print only the count");
    sub->add_option("-j,--jobs", settings.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&] {
        EnumerationOptions options;
        options.count_only = count_only;
        options.jobs = settings.jobs;
        options.max_order = settings.cap(default_meander_cap);
        auto const result = enumerate_meanders(settings.order, options);
        if (settings.json())
          return result.to_json(!count_only) + "\n";
        std::ostringstream text;
        text << result.count << '\n';
        for (auto const &[upper, lower] : result.pairs)
          text << format_permutation(upper) << '\t' << format_permutation(lower) << '\n';
        return text.str();
      };
    });
  }

  // nc
  {
    auto *sub = app.add_subcommand("nc", "List the noncrossing partitions of order n");
    add_order(sub, settings);
    add_format(sub, settings);
    add_cap(sub, settings);
    sub->callback([&] {
      action = [&] {
        auto const all = enumerate_nc(settings.order, settings.cap(default_partition_cap));
        if (settings.json()) {
          Json doc;
          doc["order"] = settings.order;
          doc["count"] = all.size();
          auto &list = doc["partitions"] = Json::array();
          for (auto const &p : all)
            list.push_back(format_partition(p));
          return dump(doc);
        }
        std::string text;
        for (auto const &p : all)
          text += format_partition(p) + "\n";
        return text;
      };
    });
  }

  // components
  std::string upper_text, lower_text;
  {
    auto *sub = app.add_subcommand("components", "Number of closed curves of a meander system");
    add_order(sub, settings);
    add_format(sub, settings);
    sub->add_option("--upper", upper_text, "Upper half permutation")->required();
    sub->add_option("--lower", lower_text, "Lower half permutation")->required();
    sub->callback([&] {
      action = [&] {
        MeanderSystem const m(parse_permutation(upper_text, settings.order),
                              parse_permutation(lower_text, settings.order));
        int const k = components(m);
        if (!settings.json())
          return std::to_string(k) + "\n";
        Json doc;
        doc["order"] = settings.order;
        doc["upper"] = format_permutation(m.upper());
        doc["lower"] = format_permutation(m.lower());
        doc["components"] = k;
        doc["meander"] = k == 1;
        return dump(doc);
      };
    });
  }

  // distance, lattice-distance, geodesic
  std::string from_text, to_text;
  auto add_endpoints = [&](CLI::App *sub) {
    add_order(sub, settings);
    add_format(sub, settings);
    sub->add_option("--from", from_text, "Source permutation")->required();
    sub->add_option("--to", to_text, "Target permutation")->required();
  };
  auto distance_json = [&](Permutation const &a, Permutation const &b, int d) {
    Json doc;
    doc["order"] = settings.order;
    doc["from"] = format_permutation(a);
    doc["to"] = format_permutation(b);
    doc["distance"] = d;
    return dump(doc);
  };
  {
    auto *sub = app.add_subcommand("distance", "Transposition distance between two permutations");
    add_endpoints(sub);
    sub->callback([&] {
      action = [&] {
        auto const a = parse_permutation(from_text, settings.order);
        auto const b = parse_permutation(to_text, settings.order);
        int const d = cayley_distance(a, b);
        return settings.json() ? distance_json(a, b, d) : std::to_string(d) + "\n";
      };
    });
  }
  {
    auto *sub = app.add_subcommand("lattice-distance", "Shortest path length inside the noncrossing lattice");
    add_endpoints(sub);
    add_cap(sub, settings);
    sub->callback([&] {
      action = [&] {
        auto const a = parse_permutation(from_text, settings.order);
        auto const b = parse_permutation(to_text, settings.order);
        from_permutation(a);
        from_permutation(b);
        int const d = lattice_distance_bfs(a, b, HasseGraph(settings.order, settings.cap(HasseGraph::default_hasse_cap)));
        return settings.json() ? distance_json(a, b, d) : std::to_string(d) + "\n";
      };
    });
  }
  {
    auto *sub = app.add_subcommand("geodesic", "A shortest path that stays inside the noncrossing lattice");
    add_endpoints(sub);
    sub->callback([&] {
      action = [&] {
        auto const a = parse_permutation(from_text, settings.order);
        auto const b = parse_permutation(to_text, settings.order);
        auto const path = lattice_geodesic(a, b);
        if (settings.json()) {
          Json doc;
          doc["order"] = settings.order;
          doc["from"] = format_permutation(a);
          doc["to"] = format_permutation(b);
          doc["length"] = path.length();
          auto &list = doc["path"] = Json::array();
          for (auto const &p : path.vertices)
            list.push_back(format_permutation(p));
          return dump(doc);
        }
        std::string text;
        for (auto const &p : path.vertices)
          text += format_permutation(p) + "\n";
        return text;
      };
    });
  }

  // genus
  std::string perm_text;
  {
    auto *sub = app.add_subcommand("genus", "Genus of the surface glued from a permutation and its dual");
    add_order(sub, settings);
    add_format(sub, settings);
    sub->add_option("--perm", perm_text, "Permutation")->required();
    sub->callback([&] {
      action = [&] {
        auto const sigma = parse_permutation(perm_text, settings.order);
        int const g = genus(sigma);
        if (!settings.json())
          return std::to_string(g) + "\n";
        Json doc;
        doc["order"] = settings.order;
        doc["permutation"] = format_permutation(sigma);
        doc["genus"] = g;
        doc["euler_characteristic"] = euler_characteristic(build_surface(sigma));
        doc["in_interval"] = in_interval(sigma);
        return dump(doc);
      };
    });
  }

  // dual
  std::string partition_text;
  bool inverse_dual = false;
  {
    auto *sub = app.add_subcommand("dual", "Dual (complement) of a noncrossing partition");
    add_order(sub, settings);
    add_format(sub, settings);
    sub->add_option("--partition", partition_text, "Partition such as {1,3}{2}")->required();
    sub->add_flag("--inverse", inverse_dual, "Apply the inverse map instead");
    sub->callback([&] {
      action = [&] {
        auto const p = parse_partition(partition_text, settings.order);
        auto const q = inverse_dual ? undual(p) : dual(p);
        if (!settings.json())
          return format_partition(q) + "\n";
        Json doc;
        doc["order"] = settings.order;
        doc["partition"] = format_partition(p);
        doc[inverse_dual ? "undual" : "dual"] = format_partition(q);
        return dump(doc);
      };
    });
  }

  // join, meet
  std::string left_text, right_text;
  auto add_binary = [&](char const *name, char const *description,
                        NoncrossingPartition (*op)(NoncrossingPartition const &, NoncrossingPartition const &)) {
    auto *sub = app.add_subcommand(name, description);
    add_order(sub, settings);
    add_format(sub, settings);
    sub->add_option("--left", left_text, "First partition")->required();
    sub->add_option("--right", right_text, "Second partition")->required();
    sub->callback([&, name, op] {
      action = [&, name, op] {
        auto const p = parse_partition(left_text, settings.order);
        auto const q = parse_partition(right_text, settings.order);
        auto const r = op(p, q);
        if (!settings.json())
          return format_partition(r) + "\n";
        Json doc;
        doc["order"] = settings.order;
        doc["left"] = format_partition(p);
        doc["right"] = format_partition(q);
        doc[name] = format_partition(r);
        return dump(doc);
      };
    });
  };
  add_binary("join", "Least upper bound of two partitions", &join);
  add_binary("meet", "Greatest lower bound of two partitions", &meet);

  // hasse
  {
    auto *sub = app.add_subcommand("hasse", "Hasse diagram of the noncrossing lattice");
    add_order(sub, settings);
    add_format(sub, settings, {"text", "json", "dot"});
    add_cap(sub, settings);
    sub->callback([&] {
      action = [&] {
        HasseGraph const graph(settings.order, settings.cap(HasseGraph::default_hasse_cap));
        if (settings.json())
          return graph.to_json() + "\n";
        return hasse_dot(graph);
      };
    });
  }

  // render-meander, render-partition
  RenderOptions render_options;
  bool no_color = false;
  bool no_labels = false;
  {
    auto *sub = app.add_subcommand("render-meander", "SVG arc diagram of a meander system");
    add_order(sub, settings);
    add_render_options(sub, render_options);
    sub->add_option("--upper", upper_text, "Upper half permutation")->required();
    sub->add_option("--lower", lower_text, "Lower half permutation")->required();
    sub->add_flag("--no-color", no_color, "Draw every arc in black");
    sub->add_flag("--no-labels", no_labels, "Omit point labels");
    sub->callback([&] {
      action = [&] {
        render_options.color_by_component = !no_color;
        render_options.labels = !no_labels;
        MeanderSystem const m(parse_permutation(upper_text, settings.order),
                              parse_permutation(lower_text, settings.order));
        return render_meander(m, render_options);
      };
    });
  }
  {
    auto *sub = app.add_subcommand("render-partition", "SVG disc picture of a noncrossing partition");
    add_order(sub, settings);
    add_render_options(sub, render_options);
    sub->add_option("--partition", partition_text, "Partition such as {1,3}{2}")->required();
    sub->add_flag("--no-labels", no_labels, "Omit point labels");
    sub->callback([&] {
      action = [&] {
        render_options.labels = !no_labels;
        return render_partition_disc(parse_partition(partition_text, settings.order), render_options);
      };
    });
  }

  // verify
  bool verification_failed = false;
  {
    auto *sub = app.add_subcommand("verify", "Run the exhaustive consistency scans at order n");
    add_order(sub, settings);
    add_format(sub, settings);
    add_cap(sub, settings);
    sub->callback([&] {
      action = [&] {
        auto const results = verify_order(settings.order, settings.cap(default_verify_cap));
        verification_failed =
          std::any_of(results.begin(), results.end(), [](auto const &r) { return !r.passed; });
        if (settings.json()) {
          Json doc;
          doc["order"] = settings.order;
          doc["passed"] = !verification_failed;
          auto &list = doc["checks"] = Json::array();
          for (auto const &r : results)
            list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
          return dump(doc);
        }
        std::string text;
        for (auto const &r : results)
          text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
        return text;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return exit_ok;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (CLI::ParseError const &e) {
    err << "meander: " << e.what() << "\n";
    return exit_usage;
  }

  std::string data;
  try {
    data = action();
  } catch (UsageError const &e) {
    err << "meander: " << e.what() << "\n";
    return exit_usage;
  } catch (std::invalid_argument const &e) {
    err << "meander: " << e.what() << "\n";
    return exit_usage;
  } catch (ResourceCapExceeded const &e) {
    err << "meander: " << e.what() << " (use --max-order or " << cap_environment_variable << ")\n";
    return exit_usage;
  }

  if (settings.output.empty()) {
    out << data;
  } else {
    std::ofstream file(settings.output, std::ios::binary);
    if (!file || !(file << data)) {
      err << "meander: cannot write " << settings.output << "\n";
      return exit_failure;
    }
  }
  return verification_failed ? exit_failure : exit_ok;
}

} // namespace meander::cli
