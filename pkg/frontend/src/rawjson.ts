/**
 * JSON parsing that keeps the server's exact number spelling.
 *
 * Every number the explorer displays must be the bytes the API sent, not a
 * JavaScript re-formatting of them, so numbers parse into RawNumber wrappers
 * that carry the original token alongside the numeric value.
 */

export class RawNumber {
  constructor(readonly raw: string) {}

  get value(): number {
    return Number(this.raw);
  }

  toString(): string {
    return this.raw;
  }
}

export type RawJson = null | boolean | string | RawNumber | RawJson[] | RawJsonObject;

export interface RawJsonObject {
  [key: string]: RawJson;
}

const NUMBER_TOKEN = /-?(?:0|[1-9]\d*)(?:\.\d+)?(?:[eE][+-]?\d+)?/y;
const WHITESPACE = new Set([" ", "\t", "\n", "\r"]);

class Parser {
  private position = 0;

  constructor(private readonly text: string) {}

  parseDocument(): RawJson {
    const value = this.parseValue();
    this.skipWhitespace();
    if (this.position !== this.text.length) {
      throw this.error("trailing characters after JSON value");
    }
    return value;
  }

  private error(message: string): SyntaxError {
    return new SyntaxError(`${message} at position ${this.position}`);
  }

  private skipWhitespace(): void {
    while (WHITESPACE.has(this.text[this.position] ?? "")) {
      this.position += 1;
    }
  }

  private expect(token: string): void {
    if (!this.text.startsWith(token, this.position)) {
      throw this.error(`expected ${JSON.stringify(token)}`);
    }
    this.position += token.length;
  }

  private parseValue(): RawJson {
    this.skipWhitespace();
    const head = this.text[this.position];
    if (head === undefined) throw this.error("unexpected end of input");
    if (head === "{") return this.parseObject();
    if (head === "[") return this.parseArray();
    if (head === '"') return this.parseString();
    if (head === "t") {
      this.expect("true");
      return true;
    }
    if (head === "f") {
      this.expect("false");
      return false;
    }
    if (head === "n") {
      this.expect("null");
      return null;
    }
    return this.parseNumber();
  }

  private parseNumber(): RawNumber {
    NUMBER_TOKEN.lastIndex = this.position;
    const match = NUMBER_TOKEN.exec(this.text);
    if (!match || match.index !== this.position) {
      throw this.error("invalid JSON value");
    }
    this.position += match[0].length;
    return new RawNumber(match[0]);
  }

  private parseString(): string {
    this.expect('"');
    let result = "";
    for (;;) {
      const ch = this.text[this.position];
      if (ch === undefined) throw this.error("unterminated string");
      this.position += 1;
      if (ch === '"') return result;
      if (ch !== "\\") {
        result += ch;
        continue;
      }
      const escape = this.text[this.position];
      if (escape === undefined) throw this.error("unterminated escape");
      this.position += 1;
      switch (escape) {
        case '"': result += '"'; break;
        case "\\": result += "\\"; break;
        case "/": result += "/"; break;
        case "b": result += "\b"; break;
        case "f": result += "\f"; break;
        case "n": result += "\n"; break;
        case "r": result += "\r"; break;
        case "t": result += "\t"; break;
        case "u": {
          const hex = this.text.slice(this.position, this.position + 4);
          if (!/^[0-9a-fA-F]{4}$/.test(hex)) throw this.error("invalid \\u escape");
          this.position += 4;
          result += String.fromCharCode(parseInt(hex, 16));
          break;
        }
        default:
          throw this.error(`invalid escape \\${escape}`);
      }
    }
  }

  private parseObject(): RawJsonObject {
    this.expect("{");
    const result: RawJsonObject = {};
    this.skipWhitespace();
    if (this.text[this.position] === "}") {
      this.position += 1;
      return result;
    }
    for (;;) {
      this.skipWhitespace();
      const key = this.parseString();
      this.skipWhitespace();
      this.expect(":");
      result[key] = this.parseValue();
      this.skipWhitespace();
      const next = this.text[this.position];
      this.position += 1;
      if (next === "}") return result;
      if (next !== ",") throw this.error("expected ',' or '}' in object");
    }
  }

  private parseArray(): RawJson[] {
    this.expect("[");
    const result: RawJson[] = [];
    this.skipWhitespace();
    if (this.text[this.position] === "]") {
      this.position += 1;
      return result;
    }
    for (;;) {
      result.push(this.parseValue());
      this.skipWhitespace();
      const next = this.text[this.position];
      this.position += 1;
      if (next === "]") return result;
      if (next !== ",") throw this.error("expected ',' or ']' in array");
    }
  }
}

export function parseRawJson(text: string): RawJson {
  return new Parser(text).parseDocument();
}

export function asObject(value: RawJson, what = "value"): RawJsonObject {
  if (value === null || typeof value !== "object" || Array.isArray(value)
      || value instanceof RawNumber) {
    throw new TypeError(`expected ${what} to be an object`);
  }
  return value;
}

export function asArray(value: RawJson, what = "value"): RawJson[] {
  if (!Array.isArray(value)) throw new TypeError(`expected ${what} to be an array`);
  return value;
}

export function asNumber(value: RawJson, what = "value"): RawNumber {
  if (!(value instanceof RawNumber)) {
    throw new TypeError(`expected ${what} to be a number`);
  }
  return value;
}

export function asString(value: RawJson, what = "value"): string {
  if (typeof value !== "string") throw new TypeError(`expected ${what} to be a string`);
  return value;
}

export function asBoolean(value: RawJson, what = "value"): boolean {
  if (typeof value !== "boolean") {
    throw new TypeError(`expected ${what} to be a boolean`);
  }
  return value;
}
