import init, { face_numbers, polygon_svg, invariants } from "./pkg/ccx_web.js";

const $ = (id) => document.getElementById(id);

function show(el, text) {
  const v = JSON.parse(text);
  if (v.error) {
    el.innerHTML = "";
    const p = document.createElement("p");
    p.textContent = v.error;
    el.append(p);
    return null;
  }
  return v;
}

function drawFaces() {
  const el = $("fn-out");
  const v = show(el, face_numbers($("fn-type").value, Number($("fn-m").value)));
  if (!v) return;
  const rows = v.f.map((f, k) => `<tr><td>${k}</td><td>${f}</td><td>${v.h[k]}</td></tr>`);
  el.innerHTML =
    `<p>${v.type}: N = ${v.N}, N+ = ${v.N_plus}</p>` +
    `<table><tr><th>k</th><th>f_k</th><th>h_k</th></tr>${rows.join("")}</table>`;
}

function drawPolygon() {
  const out = polygon_svg(
    $("pg-family").value,
    Number($("pg-n").value),
    Number($("pg-m").value),
    Number($("pg-facet").value),
  );
  const el = $("pg-out");
  if (out.startsWith("<svg")) el.innerHTML = out;
  else show(el, out);
}

function drawInvariants() {
  const el = $("inv-out");
  const v = show(el, invariants($("inv-diagram").value));
  if (v) el.innerHTML = `<pre>${JSON.stringify(v, null, 2)}</pre>`;
}

await init();
$("status").textContent = "";
for (const id of ["fn-type", "fn-m"]) $(id).addEventListener("input", drawFaces);
for (const id of ["pg-family", "pg-n", "pg-m", "pg-facet"]) $(id).addEventListener("input", drawPolygon);
$("inv-diagram").addEventListener("change", drawInvariants);
drawFaces();
drawPolygon();
drawInvariants();
