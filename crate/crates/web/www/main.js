import init, { analyze, gray, construct } from "./pkg/z2z4_web.js";

const examples = {
  "single generator (1 | 1)": "alpha 1\nbeta 1\nrows\n1 | 1\n",
  "ACD, neither part LCD": "alpha 3\nbeta 2\nrows\n1 1 1 | 2 0\n0 0 1 | 2 1\n",
  "not ACD": "alpha 2\nbeta 2\nrows\n1 0 | 1 0\n0 1 | 0 1\n1 1 | 2 2\n",
  "both images nonlinear": "alpha 2\nbeta 4\nrows\n0 1 | 2 3 1 0\n1 1 | 1 3 0 1\n",
  "LCD image, nonlinear dual image": "alpha 2\nbeta 3\nrows\n1 0 | 2 0 0\n0 1 | 2 2 0\n0 0 | 1 1 1\n",
};

const $ = (id) => document.getElementById(id);

function show(f) {
  const out = $("output");
  try {
    out.textContent = f();
    out.className = "";
  } catch (e) {
    out.textContent = e.message ?? String(e);
    out.className = "error";
  }
}

await init();

for (const name of Object.keys(examples)) {
  $("example").add(new Option(name, name));
}
$("example").onchange = () => { $("code").value = examples[$("example").value]; };
$("code").value = Object.values(examples)[0];

$("analyze").onclick = () => show(() => analyze($("code").value));
$("gray").onclick = () => show(() => gray($("code").value));
$("construct").onclick = () => show(() => {
  const text = construct($("recipe").value, +$("alpha").value, +$("delta").value, BigInt($("seed").value || 0));
  $("code").value = text;
  return analyze(text);
});
