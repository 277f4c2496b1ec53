import init, { basis, alpha, matrix } from "./pkg/qaffine_web.js";

function show(id, f) {
  const out = document.getElementById(id);
  try {
    out.className = "";
    out.textContent = f();
  } catch (e) {
    out.className = "error";
    out.textContent = String(e);
  }
}

function num(form, name) {
  return Number(form.elements[name].value);
}

function describeBasis(json) {
  const r = JSON.parse(json);
  const set = r.dual ? "Λ" : "Δ";
  const lines = [
    `${set} for V_${r.m}(x)⊗V_${r.n}(y) at (q, x, y) = (${r.specialization.q}, ${r.specialization.x}, ${r.specialization.y})`,
    r.criterion_pass ? "criterion: pass" : `criterion: fail at j = ${r.failing_j.join(", ")}`,
    `rank: ${r.rank} of ${r.expected_rank} (${r.rank === r.expected_rank ? "basis" : "not a basis"})`,
  ];
  if (r.criterion_pass !== (r.rank === r.expected_rank)) {
    lines.push("note: the rank disagrees with the criterion");
  }
  return lines.join("\n");
}

function describeMatrix(json) {
  const r = JSON.parse(json);
  return r.entries.map((row) => row.join("  |  ")).join("\n");
}

await init();

const forms = {
  basis: (f) =>
    describeBasis(basis(num(f, "m"), num(f, "n"), f.elements.q.value, f.elements.x.value, f.elements.y.value, f.elements.dual.checked)),
  alpha: (f) => JSON.parse(alpha(num(f, "m"), num(f, "n"), num(f, "l"))).value,
  matrix: (f) => describeMatrix(matrix(num(f, "m"), num(f, "n"), num(f, "l"), f.elements.norm.value)),
};

for (const [id, run] of Object.entries(forms)) {
  const form = document.getElementById(id);
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    show(`${id}-out`, () => run(form));
  });
  show(`${id}-out`, () => run(form));
}
