import pathlib
from setuptools import find_packages, setup

# The directory containing this file
HERE = pathlib.Path(__file__).parent

# The text of the README file
README = (HERE / "README.md").read_text()

# This call to setup() does all the work
setup(
    name="permpoly",
    version="0.1.0",
    python_requires=">=3.8",
    description="Exhaustive verification and search of permutation polynomials over finite fields",
    long_description=README,
    long_description_content_type="text/markdown",
    url="",
    author="",
    author_email="",
    license="MIT",
    keywords="finite fields, permutation polynomials, Niho exponents, trace maps",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=["*.tests", "*.tests.*"]),
    zip_safe=False,
    include_package_data=True,
    install_requires=[
        "Jinja2>=2.11.2",
        "PyYAML>=5.3.1",
        "coloredlogs>=14.0",
        "numpy>=1.18",
    ],
    entry_points={
        "console_scripts": [
            "permpoly=permpoly.__main__:main",
        ]
    },
)
