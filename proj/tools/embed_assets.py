#!/usr/bin/env python3
"""Regenerates include/geosynth/prompts_default.hpp from assets/prompts/.

Run from the repository root:  python3 tools/embed_assets.py
"""
import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
PROMPT_DIR = os.path.join(ROOT, "assets", "prompts")
OUT = os.path.join(ROOT, "include", "geosynth", "prompts_default.hpp")


def main():
    names = sorted(os.listdir(PROMPT_DIR))
    entries = []
    for name in names:
        path = os.path.join(PROMPT_DIR, name)
        if not os.path.isfile(path):
            continue
        with open(path, encoding="utf-8") as f:
            content = f.read()
        assert ")GEOSYNTH_ASSET(" not in content
        entries.append((name, content))

    lines = [
        "#pragma once",
        "",
        "// Generated by tools/embed_assets.py from assets/prompts/. Do not edit.",
        "",
        "#include <map>",
        "#include <string>",
        "",
        "namespace geosynth {",
        "",
        "inline const std::map<std::string, std::string>& default_prompt_assets() {",
        "  static const std::map<std::string, std::string> assets = {",
    ]
    for name, content in entries:
        lines.append('      {"%s",' % name)
        lines.append('       R"GEOSYNTH_ASSET(%s)GEOSYNTH_ASSET"},' % content)
    lines += [
        "  };",
        "  return assets;",
        "}",
        "",
        "}  // namespace geosynth",
        "",
    ]
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("\n".join(lines))
    print(f"embedded {len(entries)} prompt assets into {OUT}")


if __name__ == "__main__":
    main()
