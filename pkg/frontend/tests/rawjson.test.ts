import { describe, expect, it } from "vitest";

import { RawNumber, asArray, asNumber, asObject, asString,
         parseRawJson } from "../src/rawjson.js";

describe("parseRawJson", () => {
  it("keeps number tokens exactly as sent", () => {
    const body = '{"a": 1e-07, "b": -0.0625, "c": 0.53125, "d": 1800, "e": 0}';
    const doc = asObject(parseRawJson(body));
    expect(asNumber(doc["a"]!).raw).toBe("1e-07");
    expect(asNumber(doc["b"]!).raw).toBe("-0.0625");
    expect(asNumber(doc["c"]!).raw).toBe("0.53125");
    expect(asNumber(doc["d"]!).raw).toBe("1800");
    expect(asNumber(doc["e"]!).raw).toBe("0");
  });

  it("raw tokens are verbatim substrings of the body", () => {
    const body = '{"flows": [{"p": 0.166667}, {"p": 3.0574468085106368e-05}]}';
    const doc = asObject(parseRawJson(body));
    for (const entry of asArray(doc["flows"]!)) {
      const token = asNumber(asObject(entry)["p"]!).raw;
      expect(body.includes(token)).toBe(true);
    }
  });

  it("numeric values still compare correctly", () => {
    const n = parseRawJson("6.25e-2");
    expect(n).toBeInstanceOf(RawNumber);
    expect((n as RawNumber).value).toBeCloseTo(0.0625, 15);
  });

  it("parses nested structure, strings and escapes", () => {
    const doc = asObject(parseRawJson(
      '{"name": "R. L\\u00f3pez", "quote": "a\\"b", "list": [true, false, null]}'));
    expect(asString(doc["name"]!)).toBe("R. López");
    expect(asString(doc["quote"]!)).toBe('a"b');
    expect(asArray(doc["list"]!)).toEqual([true, false, null]);
  });

  it("handles whitespace and empty containers", () => {
    expect(parseRawJson("  [ ]  ")).toEqual([]);
    expect(parseRawJson("{ }")).toEqual({});
  });

  it("rejects malformed documents", () => {
    expect(() => parseRawJson("{bad")).toThrow(SyntaxError);
    expect(() => parseRawJson('{"a": 1,}')).toThrow(SyntaxError);
    expect(() => parseRawJson("1 2")).toThrow(SyntaxError);
    expect(() => parseRawJson('"unterminated')).toThrow(SyntaxError);
  });

  it("typed accessors reject mismatches", () => {
    expect(() => asNumber(parseRawJson('"x"'))).toThrow(TypeError);
    expect(() => asObject(parseRawJson("[1]"))).toThrow(TypeError);
    expect(() => asString(parseRawJson("3"))).toThrow(TypeError);
  });
});
