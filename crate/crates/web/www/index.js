// Built with: wasm-bindgen --target web --out-dir www/pkg <fuzzmorph_web.wasm>
import init, { example, analyze, compressRelation, neighborhoods } from "./pkg/fuzzmorph_web.js";

const $ = (id) => document.getElementById(id);

function heatmap(title, m, changed = []) {
  const marked = new Set(changed.map(([a, b]) => a + "\u0000" + b));
  const table = document.createElement("table");
  table.className = "heat";
  const head = table.insertRow();
  const corner = document.createElement("th");
  corner.textContent = title;
  head.appendChild(corner);
  for (const label of m.labels) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  m.cells.forEach((row, i) => {
    const tr = table.insertRow();
    const th = document.createElement("th");
    th.textContent = m.labels[i];
    tr.appendChild(th);
    row.forEach((cell, j) => {
      const td = tr.insertCell();
      td.textContent = cell.value === 0 ? "" : cell.text;
      td.title = `${m.labels[i]} → ${m.labels[j]}: ${cell.text}`;
      const light = 100 - 55 * cell.value;
      td.style.background = `hsl(210, 70%, ${light}%)`;
      if (cell.value > 0.6) td.style.color = "white";
      if (marked.has(m.labels[i] + "\u0000" + m.labels[j])) td.className = "changed";
    });
  });
  return table;
}

function show(target, build) {
  const out = $(target);
  out.replaceChildren();
  try {
    build(out);
  } catch (e) {
    const p = document.createElement("p");
    p.className = "error";
    p.textContent = String(e);
    out.appendChild(p);
  }
}

function text(out, s, cls = "verdict") {
  const p = document.createElement("p");
  p.className = cls;
  p.textContent = s;
  out.appendChild(p);
}

function runAnalyze() {
  show("analyze-out", (out) => {
    const r = JSON.parse(analyze($("relation").value, $("mapping").value));
    text(out, r.report);
    const row = document.createElement("div");
    row.className = "row";
    for (const [title, m, changed] of [
      ["R", r.relation, []],
      ["f(R)", r.image, []],
      ["f⁻¹(f(R))", r.reconstruction, r.changed],
    ]) {
      const cell = document.createElement("div");
      cell.appendChild(heatmap(title, m, changed));
      row.appendChild(cell);
    }
    out.appendChild(row);
    text(out, r.changed.length ? `${r.changed.length} entries changed (outlined)` : "round trip exact");
  });
}

function runCompress() {
  show("compress-out", (out) => {
    const r = JSON.parse(compressRelation($("relation").value, $("mode").value));
    const blocks = r.blocks.map((b) => `${b.label} = {${b.members.join(", ")}}`).join("\n");
    text(out, `${blocks}\nround trip ${r.lossless ? "exact" : "lossy"}`);
    out.appendChild(heatmap("quotient", r.quotient));
  });
}

function runNeighborhoods() {
  show("neighborhoods-out", (out) => {
    const r = JSON.parse(neighborhoods($("relation").value, $("element").value.trim()));
    text(out, Object.entries(r).map(([k, v]) => `${k.padEnd(4)}  ${v}`).join("\n"));
  });
}

await init();
const start = JSON.parse(example());
$("relation").value = start.relation;
$("mapping").value = start.mapping;
$("analyze").onclick = runAnalyze;
$("compress").onclick = runCompress;
$("neighborhoods").onclick = runNeighborhoods;
runAnalyze();
