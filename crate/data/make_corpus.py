# Writes the bundled sample corpus. Texts are original, written for this repository.
import pathlib

ROOT = pathlib.Path(__file__).parent / "sample_corpus"

DOCS = {
"abstract-01": ("""High-entropy alloys contain five or more principal elements in near-equal proportions. Their large configurational entropy favours simple solid-solution phases over brittle intermetallic compounds. In this study we cast a CoCrFeMnNi alloy by vacuum arc melting and homogenized it at 1200 C for 24 h. X-ray diffraction confirmed a single face-centred cubic phase after homogenization. Tensile tests at room temperature gave a yield strength of 260 MPa and an elongation above 50 percent. At 77 K the yield strength rose to 450 MPa while ductility also increased. Deformation twinning was identified as the mechanism responsible for the improved low-temperature behaviour. These results confirm that the alloy is a promising candidate for cryogenic structural applications.""",
"""A CoCrFeMnNi high-entropy alloy formed a single face-centred cubic phase after homogenization. Its strength and ductility both increased at 77 K because of deformation twinning, making it promising for cryogenic applications."""),

"abstract-02": ("""Refractory high-entropy alloys are being explored for turbine components that operate above the limits of nickel superalloys. We studied an equiatomic NbMoTaW alloy produced by powder metallurgy. The sintered material reached 98 percent of theoretical density. Compression tests showed a yield strength of 1050 MPa at 1000 C and 480 MPa at 1600 C. Room-temperature ductility, however, remained below 3 percent. Fractography revealed intergranular cracking along oxide-decorated grain boundaries. Reducing oxygen pickup during milling is expected to improve ductility. The alloy retains exceptional strength at temperatures where conventional alloys soften.""",
"""An NbMoTaW refractory high-entropy alloy retained high compressive strength up to 1600 C. Its room-temperature ductility was poor because of intergranular cracking at oxide-decorated grain boundaries."""),

"abstract-03": ("""Corrosion resistance is a key requirement for alloys used in marine environments. We evaluated AlCrCuFeNi alloys with varying aluminium content in 3.5 percent sodium chloride solution. Potentiodynamic polarization showed that corrosion current density increased with aluminium content. Alloys with low aluminium formed a compact chromium-rich passive film. Higher aluminium promoted a body-centred cubic phase that was depleted in chromium. Copper segregation to interdendritic regions caused localized galvanic attack. Raising the test temperature from 25 C to 80 C accelerated pitting in every composition. Limiting aluminium and copper is therefore recommended for seawater service.""",
"""In AlCrCuFeNi alloys, corrosion in sodium chloride solution worsened as aluminium content increased. Chromium-rich passive films protected low-aluminium alloys, while copper segregation caused localized attack."""),

"abstract-04": ("""Machine learning offers a route to accelerate the discovery of new alloys. We assembled a dataset of 1300 multi-principal element alloys with reported phases. Descriptors included atomic size mismatch, mixing enthalpy, valence electron concentration and electronegativity difference. A random forest classifier predicted solid-solution, intermetallic and mixed phases with 87 percent accuracy. Valence electron concentration was the most informative descriptor for distinguishing face-centred and body-centred cubic structures. The model was used to screen 20000 hypothetical compositions. Ten predicted single-phase alloys were synthesized and eight were confirmed experimentally. Data-driven screening can greatly reduce the experimental effort needed to find stable alloys.""",
"""A random forest trained on 1300 alloys predicted phase formation with 87 percent accuracy. Screening hypothetical compositions led to eight experimentally confirmed single-phase alloys."""),

"abstract-05": ("""Additive manufacturing enables complex geometries but introduces unusual microstructures. We printed an AlCoCrFeNi alloy by laser powder bed fusion using a range of laser powers and scan speeds. Low energy densities left lack-of-fusion porosity, while high energy densities caused keyhole pores and cracking. An intermediate window produced parts with relative density above 99 percent. The as-built microstructure consisted of fine columnar grains with nanoscale spinodal decomposition. Hardness reached 620 HV, higher than that of the cast alloy. Post-build hot isostatic pressing closed residual pores but coarsened the microstructure. Process optimization is essential to obtain dense and crack-free printed alloys.""",
"""Laser powder bed fusion of AlCoCrFeNi produced dense parts only within an intermediate energy window. The printed alloy had fine columnar grains and higher hardness than cast material."""),

"abstract-06": ("""Thermal stability of nanocrystalline metals is limited by rapid grain growth. We examined a nanocrystalline CoCrFeNi alloy produced by high-pressure torsion. Annealing between 300 C and 800 C was carried out for one hour. Grain size remained below 100 nm up to 500 C because of sluggish diffusion. Above 600 C, chromium-rich precipitates formed at grain boundaries and grains grew quickly. Hardness followed a Hall-Petch relation until precipitation began. The results show that sluggish diffusion stabilizes nanocrystalline grains over a useful temperature range. Alloy design can exploit this effect to produce thermally stable nanostructured materials.""",
"""A nanocrystalline CoCrFeNi alloy kept grains below 100 nm up to 500 C owing to sluggish diffusion. Precipitation and grain growth began above 600 C."""),

"abstract-07": ("""Lightweight high-entropy alloys aim to combine low density with high strength. We designed alloys from aluminium, magnesium, lithium, zinc and titanium with densities below 4 grams per cubic centimetre. Induction melting in a protective atmosphere limited the evaporation of magnesium and lithium. All compositions contained a hexagonal close-packed matrix with intermetallic particles. The specific compressive strength exceeded that of commercial aluminium alloys. Ductility was limited by cracking at the intermetallic particles. Reducing zinc content decreased the intermetallic fraction and improved plasticity. Lightweight alloys of this class are attractive for transportation applications.""",
"""Low-density alloys based on aluminium, magnesium, lithium, zinc and titanium showed higher specific strength than commercial aluminium alloys. Lowering zinc reduced intermetallics and improved plasticity."""),

"abstract-08": ("""Irradiation damage limits the lifetime of structural materials in nuclear reactors. We irradiated CrFeMnNi and pure nickel with 3 MeV nickel ions at 500 C. Transmission electron microscopy showed that dislocation loops in the alloy were smaller and more numerous than in nickel. Void swelling in the alloy was less than one tenth of that in nickel at the same dose. Chemical complexity is believed to slow the migration of interstitial defects. Radiation-induced segregation of chromium was observed at grain boundaries. Overall, the alloy showed superior resistance to radiation damage. Concentrated solid solutions are promising for advanced reactor components.""",
"""Under nickel-ion irradiation, a CrFeMnNi alloy swelled far less than pure nickel and formed smaller dislocation loops. Chemical complexity slows defect migration and improves radiation resistance."""),

"abstract-09": ("""Hydrogen embrittlement threatens the use of high-strength alloys in hydrogen infrastructure. We charged CoCrFeMnNi specimens electrochemically and performed slow strain rate tensile tests. Hydrogen reduced elongation by 15 percent, a much smaller loss than in austenitic stainless steel. Thermal desorption spectroscopy revealed that most hydrogen was trapped at grain boundaries. Fracture surfaces showed mixed ductile and intergranular features. Grain refinement increased the density of trapping sites and diluted hydrogen at each boundary. Fine-grained alloys therefore showed the lowest embrittlement. The alloy family appears suitable for components exposed to gaseous hydrogen.""",
"""Hydrogen charging reduced the elongation of CoCrFeMnNi by only 15 percent, less than in stainless steel. Grain refinement diluted trapped hydrogen and further reduced embrittlement."""),

"abstract-10": ("""Thin films of high-entropy alloys are candidates for diffusion barriers in microelectronics. We deposited AlCrTaTiZr nitride films by reactive magnetron sputtering. Increasing nitrogen flow changed the structure from amorphous to a face-centred cubic nitride. Copper diffusion through 10 nm barrier films was evaluated after annealing up to 900 C. The nitride films prevented copper diffusion up to 850 C. Sheet resistance measurements confirmed the barrier remained intact. Severe lattice distortion and sluggish diffusion were credited for the excellent barrier performance. Such films could extend the reliability of copper interconnects.""",
"""Sputtered AlCrTaTiZr nitride films 10 nm thick blocked copper diffusion up to 850 C. Lattice distortion and sluggish diffusion explain the strong barrier performance."""),

"abstract-11": ("""Catalysis is an emerging application for high-entropy materials. We synthesized PtPdRhRuIr nanoparticles by carbothermal shock on carbon supports. Each particle contained all five metals in a homogeneous solid solution. The nanoparticles catalysed ammonia oxidation with high conversion and stability. Performance remained unchanged after 50 hours of continuous operation. Density functional theory suggested that the varied surface sites optimize adsorption energies. Conventional binary catalysts degraded under the same conditions. Multi-element nanoparticles open a large design space for durable catalysts.""",
"""Five-metal PtPdRhRuIr nanoparticles made by carbothermal shock catalysed ammonia oxidation stably for 50 hours. Diverse surface sites were linked to their performance."""),

"abstract-12": ("""Fatigue resistance governs the reliability of cyclically loaded parts. We performed high-cycle fatigue tests on CoCrFeMnNi with two grain sizes. The fine-grained material showed a fatigue limit of 280 MPa, higher than the coarse-grained material. Cracks initiated at annealing twin boundaries and persistent slip bands. Crack growth rates were similar to those of austenitic stainless steels. Surface polishing raised the fatigue limit by removing machining marks. The fatigue ratio compared favourably with conventional alloys of similar strength. Grain refinement is recommended to improve fatigue performance.""",
"""Fine-grained CoCrFeMnNi reached a fatigue limit of 280 MPa, above that of coarse-grained material. Cracks initiated at twin boundaries and slip bands."""),

"abstract-13": ("""Magnetic properties of high-entropy alloys can be tuned through composition. We prepared FeCoNi(AlSi)x alloys with x ranging from 0 to 0.8. Adding aluminium and silicon transformed the structure from face-centred cubic to body-centred cubic. Saturation magnetization decreased gradually with x while electrical resistivity increased strongly. Coercivity remained low across the series. The combination of high resistivity and low coercivity reduces eddy current losses. Alloys with x near 0.2 offered the best balance of properties. These alloys are promising soft magnetic materials for high-frequency applications.""",
"""In FeCoNi(AlSi)x alloys, aluminium and silicon raised resistivity while keeping coercivity low. Compositions near x equal to 0.2 gave the best soft magnetic properties."""),

"abstract-14": ("""Oxidation resistance is critical for alloys used at high temperatures. We exposed AlCoCrFeNi alloys to air at 1100 C for up to 500 hours. Mass gain followed a parabolic law indicating diffusion-controlled growth. A continuous alumina scale formed when the aluminium content was sufficient. Lower aluminium content led to chromia and spinel oxides that spalled during cooling. Adding a small amount of yttrium improved scale adhesion. The alumina-forming alloys outperformed several commercial heat-resistant steels. Careful control of aluminium content is required to ensure protective oxidation behaviour.""",
"""AlCoCrFeNi alloys formed protective alumina scales at 1100 C when aluminium content was sufficient. Yttrium improved scale adhesion, and these alloys outperformed commercial heat-resistant steels."""),

"abstract-15": ("""Predicting phase stability from first principles remains challenging for multi-component alloys. We combined density functional theory with cluster expansion and Monte Carlo simulations for the MoNbTaW system. The simulations predicted B2 ordering between molybdenum and tantalum below 1200 K. Short-range order persisted above the ordering temperature. Calculated diffuse scattering patterns agreed with neutron measurements. Ordering was predicted to raise yield strength by hindering dislocation motion. The approach captures both long- and short-range order in concentrated alloys. Computational screening can guide heat treatments that exploit ordering.""",
"""First-principles Monte Carlo simulations of MoNbTaW predicted B2 ordering below 1200 K and persistent short-range order. The predictions matched neutron scattering measurements."""),

"abstract-16": ("""Wear resistance is important for coatings on cutting tools and engine parts. We deposited CoCrFeNiTi coatings by plasma spraying on steel substrates. The coatings contained a face-centred cubic matrix with hard Laves phase particles. Pin-on-disc tests showed a wear rate one third that of the uncoated steel. Oxide tribofilms formed on the worn surface and reduced friction. Higher titanium content increased hardness but caused coating cracking. An intermediate titanium content offered the best wear behaviour. Plasma-sprayed coatings of this type can extend component life.""",
"""Plasma-sprayed CoCrFeNiTi coatings cut the wear rate of steel by two thirds thanks to hard Laves phase particles and oxide tribofilms. Intermediate titanium content gave the best results."""),

"abstract-17": ("""Cryogenic applications demand alloys that keep their toughness at very low temperatures. We measured the fracture toughness of CrCoNi between 293 K and 20 K. Toughness exceeded 200 MPa per square root metre at all temperatures. At 20 K, deformation involved twinning and a transformation to a hexagonal phase. These mechanisms sustained strain hardening and delayed crack propagation. Crack-tip examination showed extensive nanotwinning ahead of the crack. The alloy outperforms most metallic materials in damage tolerance at cryogenic temperatures. It is a strong candidate for liquid hydrogen storage and space systems.""",
"""CrCoNi kept fracture toughness above 200 MPa per square root metre down to 20 K. Twinning and a phase transformation sustained strain hardening and delayed cracking."""),

"abstract-18": ("""Welding is essential for building structures from high-entropy alloys. We joined CoCrFeMnNi plates by gas tungsten arc welding and electron beam welding. Both processes produced sound welds without cracks or porosity. The fusion zone consisted of columnar dendrites with mild manganese segregation. Electron beam welds had a narrower heat-affected zone and finer dendrites. Tensile specimens failed in the base metal, showing that the welds were stronger than the parent plate. Hardness was nearly uniform across the joints. The alloy shows excellent weldability with common fusion welding methods.""",
"""CoCrFeMnNi plates were welded by arc and electron beam processes without defects. Tensile failures occurred in the base metal, confirming excellent weldability."""),

"abstract-19": ("""Severe lattice distortion is often cited as a core effect in high-entropy alloys. We measured local atomic displacements in several alloys using synchrotron pair distribution function analysis. Displacements were largest in alloys with large atomic size mismatch such as those containing zirconium. Solid-solution strengthening correlated with the measured mean square displacement. Alloys of similar-sized elements showed only modest distortion. The measured values agreed with first-principles predictions. Lattice distortion therefore depends strongly on composition rather than on the number of elements. Composition-aware models are needed to predict strengthening in these alloys.""",
"""Pair distribution function measurements showed that lattice distortion depends on atomic size mismatch, not on the number of elements. Strengthening correlated with measured atomic displacements."""),

"abstract-20": ("""Recycling of high-entropy alloys is rarely addressed despite their high content of critical elements. We remelted machining chips of CoCrFeMnNi with and without a protective flux. Without flux, oxygen and nitrogen contents rose and manganese was lost by evaporation. The flux limited contamination and preserved the original composition within one percent. Recycled ingots showed tensile properties close to those of virgin material. Life cycle assessment indicated a large reduction in energy use and emissions. Closed-loop recycling can improve the sustainability of these alloys. Design for recycling should become part of alloy development.""",
"""Remelting CoCrFeMnNi chips under a protective flux preserved composition and tensile properties. Recycling greatly reduced energy use and emissions."""),
}

def main():
    for sub in ("docs", "refs"):
        (ROOT / sub).mkdir(parents=True, exist_ok=True)
    for stem, (doc, ref) in DOCS.items():
        (ROOT / "docs" / f"{stem}.txt").write_text(doc + "\n", encoding="utf-8")
        (ROOT / "refs" / f"{stem}.txt").write_text(ref + "\n", encoding="utf-8")
    print(f"wrote {len(DOCS)} documents to {ROOT}")

if __name__ == "__main__":
    main()
