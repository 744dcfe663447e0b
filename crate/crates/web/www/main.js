import init, { analyze, enumerate, quadrangle } from "./pkg/graphreg_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function show(id, json) {
  $(id).textContent = JSON.stringify(JSON.parse(json), null, 2);
}

await init();

$("analyze").onclick = () => show("analyze-out", analyze($("source").value, num("t")));
$("enumerate").onclick = () =>
  show("enumerate-out", enumerate(num("m"), num("n"), $("k4e").checked, $("irr").checked));
$("quadrangle").onclick = () => show("quadrangle-out", quadrangle(num("q")));
