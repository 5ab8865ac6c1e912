import json
from collections.abc import Iterable, Mapping

from chebkit.serializers import to_representation

PASS_KEYS = ("passed", "overall", "bound_pass", "overall_pass")
# mappings reported as one line
LEAF_KEYS = ("description", "optimum", "least_prime")


def collect_failures(data):
    """Failing checks, table rows and records inside ``data``."""
    found = []
    if isinstance(data, Mapping):
        failing = any(data.get(key) is False for key in PASS_KEYS)
        if any(key in data for key in LEAF_KEYS):
            return [data] if failing else []
        for value in data.values():
            found += collect_failures(value)
        if failing and not found:
            found.append(data)
    elif isinstance(data, Iterable) and not isinstance(data, str):
        for item in data:
            found += collect_failures(item)
    return found


class Renderer:
    def render_success(self, data):
        return data

    def render_errors(self, data):
        return data

    def dump(self, data):
        raise NotImplementedError

    def render(self, report):
        data = to_representation(report)
        if data["overall_pass"]:
            data = self.render_success(data)
        else:
            data = self.render_errors(data)
        return self.dump(data)


class JSONRenderer(Renderer):
    """The Report fields and nothing else, so two runs diff cleanly."""

    def __init__(self, drop_timing=False):
        self.drop_timing = drop_timing

    def dump(self, data):
        if self.drop_timing:
            data = {key: value for key, value in data.items() if key != "wallclock_ms"}
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _scalar(value):
    if isinstance(value, float):
        return "{:.6g}".format(value)
    return str(value)


class TextRenderer(Renderer):
    """One line per check, table row or record, failures repeated at the end."""

    def _line(self, item):
        if "description" in item:
            mark = "ok  " if item["passed"] else "FAIL"
            return "  [{}] {}: {} {} {} (margin {})".format(
                mark,
                item["description"],
                _scalar(item["lhs"]),
                item["relation"],
                _scalar(item["rhs"]),
                _scalar(item["margin"]),
            )

        if "optimum" in item:
            bound, optimum = item["bound"], item["optimum"]
            template = "  [{}] {} T={} alpha={} K={} C={} margin={} best alpha={} K={}"
            return template.format(
                "ok  " if item["passed"] else "FAIL",
                bound["variant"],
                bound["T"],
                bound["alpha"],
                _scalar(bound["K"]),
                bound["C"],
                _scalar(item["margin"]),
                _scalar(optimum["alpha"]),
                _scalar(optimum["K"]),
            )

        if "least_prime" in item:
            return "  [{}] {} class {}: p = {}, log p / log d_L = {}".format(
                "ok  " if item["bound_pass"] else "FAIL",
                item["field"]["name"],
                item["class_label"],
                item["least_prime"],
                _scalar(item["exponent_realized"]),
            )

        return "  " + ", ".join(
            "{}={}".format(key, _scalar(value))
            for key, value in item.items()
            if not isinstance(value, (Mapping, list))
        )

    def _lines(self, result):
        if isinstance(result, Mapping) and "checks" in result:
            status = "certified" if result["overall"] else "NOT certified"
            yield "{}: {}".format(result["case_name"], status)
            for check in result["checks"]:
                yield self._line(check)
        elif isinstance(result, Mapping) and "records" in result:
            yield "survey: max exponent {}".format(_scalar(result["max_exponent"]))
            for record in result["records"]:
                yield self._line(record)
            for failure in result["failures"]:
                yield "  [FAIL] " + failure
        elif isinstance(result, Mapping):
            yield self._line(result)
        else:
            yield "  " + _scalar(result)

    def render_success(self, data):
        lines = ["chebkit {} {}".format(data["tool_version"], data["command"])]
        for result in data["results"]:
            lines.extend(self._lines(result))
        lines.append("overall: pass")
        return lines

    def render_errors(self, data):
        lines = self.render_success(data)[:-1]
        failures = collect_failures(data["results"])
        lines.append("overall: FAIL, {} failing".format(len(failures)))
        for failure in failures:
            lines.append(self._line(failure))
        return lines

    def dump(self, lines):
        return "\n".join(lines) + "\n"
